#include "thetaquartic/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace thetaquartic {

namespace {

BitangentSet corrupt_line(const BitangentSet& set, const Characteristic& victim) {
    std::vector<BitangentLine> lines = set.lines();
    for (auto& l : lines) {
        if (l.ch != victim) continue;
        CVector bump(3);
        bump << Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 1.0);
        l.coords += 0.25 * l.coords.norm() * bump;
    }
    return BitangentSet(std::move(lines));
}

double spread_from_first(const std::vector<Complex>& ratios) {
    double worst = 0.0;
    for (const auto& r : ratios) worst = std::max(worst, std::abs(r - ratios.front()) / std::abs(ratios.front()));
    return worst;
}

Complex sign_chi(const SignedCharacteristic& image, const Characteristic& m, const SymplecticMatrix& gamma) {
    return static_cast<double>(image.sign) * chi(m, gamma);
}

Complex table_jacobian(const ThetaTable& table, const std::array<Characteristic, 3>& n) {
    CMatrix rows(3, 3);
    for (int i = 0; i < 3; ++i) rows.row(i) = table.gradient(n[static_cast<std::size_t>(i)]).transpose();
    return rows.determinant() / std::pow(std::numbers::pi, 3);
}

}  // namespace

std::pair<Characteristic, Characteristic> random_even_pair(std::mt19937_64& rng) {
    static const auto even = enumerate(3, ParityFilter::Even);
    std::uniform_int_distribution<std::size_t> pick(0, even.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    return {even[i], even[j]};
}

WeberTrial weber_trial(const SiegelPoint& tau, const Characteristic& m1, const Characteristic& m2,
                       const WeberVerifyOptions& opts) {
    const ThetaTable table = evaluate_all(tau, opts.theta);
    require_nonvanishing_even(table);
    const Complex q = table.value(m1) / table.value(m2);
    const Complex lhs = (q * q) * (q * q);
    const AronholdSet aronhold = aronhold_for_pair(m1, m2);
    BitangentSet lines = bitangents_from_table(table, tau.tau());
    if (opts.corrupt) lines = corrupt_line(lines, aronhold.members[0]);
    const Complex rhs = weber_rhs(make_weber_instance(lines, m1, m2, aronhold));
    return {m1, m2, lhs, rhs, std::abs(lhs - rhs) / std::abs(lhs)};
}

std::vector<WeberTrial> weber_verify_random(int trials, std::uint64_t seed, const WeberVerifyOptions& opts) {
    if (trials < 0) throw Error(ErrorCode::InvalidArgument, "trial count must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<WeberTrial> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        const SiegelPoint tau = random_tau(rng(), 3, opts.conditioning);
        const auto [m1, m2] = random_even_pair(rng);
        out.push_back(weber_trial(tau, m1, m2, opts));
    }
    return out;
}

std::vector<WeberTrial> weber_verify_tau(const SiegelPoint& tau, const WeberVerifyOptions& opts) {
    const auto even = enumerate(3, ParityFilter::Even);
    std::vector<WeberTrial> out;
    for (const auto& m : even)
        if (m != even.front()) out.push_back(weber_trial(tau, m, even.front(), opts));
    return out;
}

SymplecticMatrix random_conditioned_word(std::span<const SymplecticMatrix> gens, int max_length,
                                         std::span<const SiegelPoint> taus, double min_lambda, std::mt19937_64& rng) {
    if (max_length < 1) throw Error(ErrorCode::InvalidArgument, "word length must be positive");
    std::uniform_int_distribution<int> length(1, max_length);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SymplecticMatrix word = random_word(gens, length(rng), rng);
        bool ok = true;
        for (const auto& tau : taus) {
            try {
                ok = act_tau(word, tau).min_imag_eigenvalue() >= min_lambda;
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) return word;
    }
    throw Error(ErrorCode::NotFound, "no sufficiently well-conditioned group word found");
}

TransformReport transform_check(std::uint64_t seed, const TransformOptions& opts) {
    std::mt19937_64 rng(seed);
    std::vector<SiegelPoint> taus;
    for (int i = 0; i < opts.taus; ++i) taus.push_back(random_tau(rng(), 3, opts.conditioning));

    std::vector<std::array<Characteristic, 3>> azygetic;
    const auto odd = enumerate(3, ParityFilter::Odd);
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j)
            for (std::size_t k = j + 1; k < odd.size(); ++k)
                if (is_azygetic_triple(odd[i], odd[j], odd[k])) azygetic.push_back({odd[i], odd[j], odd[k]});
    std::uniform_int_distribution<std::size_t> pick_triple(0, azygetic.size() - 1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int p = 0; p < opts.jacobian_pairs; ++p) {
        const std::size_t a = pick_triple(rng);
        std::size_t b = pick_triple(rng);
        while (b == a) b = pick_triple(rng);
        pairs.emplace_back(a, b);
    }

    const auto even = enumerate(3, ParityFilter::Even);
    const auto gens = generators(3);
    std::vector<ThetaTable> base;
    for (const auto& tau : taus) base.push_back(evaluate_all(tau, opts.theta));

    TransformReport report;
    for (int w = 0; w < opts.words; ++w) {
        const SymplecticMatrix gamma = random_conditioned_word(gens, opts.max_word_length, taus, opts.min_lambda, rng);
        std::vector<SignedCharacteristic> image(64);
        for (const auto& m : enumerate(3, ParityFilter::All)) image[m.index()] = gamma_act_char(gamma, m);

        for (std::size_t t = 0; t < taus.size(); ++t) {
            const ThetaTable& before = base[t];
            const ThetaTable after = evaluate_all(act_tau(gamma, taus[t]), opts.theta);
            TransformCase c{w, static_cast<int>(t)};

            std::vector<Complex> ratios;
            for (const auto& m : even) {
                const auto& img = image[m.index()];
                ratios.push_back(after.value(img.ch) / (sign_chi(img, m, gamma) * before.value(m)));
            }
            c.theta_spread = spread_from_first(ratios);

            const CMatrix factor = automorphy_factor(gamma, taus[t]);
            std::optional<Complex> lambda;
            for (const auto& n : odd) {
                const auto& img = image[n.index()];
                const CVector lhs = after.gradient(img.ch);
                const CVector rhs = sign_chi(img, n, gamma) * (factor * before.gradient(n));
                if (!lambda) lambda = rhs.dot(lhs) / rhs.squaredNorm();
                c.gradient_spread = std::max(c.gradient_spread, (lhs - *lambda * rhs).norm() / lhs.norm());
            }

            for (const auto& [ia, ib] : pairs) {
                const auto& ta = azygetic[ia];
                const auto& tb = azygetic[ib];
                std::array<Characteristic, 3> ga;
                std::array<Characteristic, 3> gb;
                Complex factor_a(1.0, 0.0);
                Complex factor_b(1.0, 0.0);
                for (std::size_t i = 0; i < 3; ++i) {
                    ga[i] = image[ta[i].index()].ch;
                    gb[i] = image[tb[i].index()].ch;
                    factor_a *= sign_chi(image[ta[i].index()], ta[i], gamma);
                    factor_b *= sign_chi(image[tb[i].index()], tb[i], gamma);
                }
                const Complex lhs = table_jacobian(after, ga) / table_jacobian(after, gb);
                const Complex rhs = (factor_a / factor_b) * table_jacobian(before, ta) / table_jacobian(before, tb);
                c.jacobian_spread = std::max(c.jacobian_spread, std::abs(lhs / rhs - 1.0));
            }

            report.max_theta_spread = std::max(report.max_theta_spread, c.theta_spread);
            report.max_gradient_spread = std::max(report.max_gradient_spread, c.gradient_spread);
            report.max_jacobian_spread = std::max(report.max_jacobian_spread, c.jacobian_spread);
            report.cases.push_back(c);
        }
    }
    return report;
}

}  // namespace thetaquartic
