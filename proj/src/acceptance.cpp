#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "thetaquartic/harness.hpp"

namespace thetaquartic {

namespace {

using Clock = std::chrono::steady_clock;

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CriterionResult timed(std::string id, std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = Clock::now();
    CriterionResult r{std::move(id), std::move(name), false, "", 0.0};
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<Complex> random_factors(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_mag(-3.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> f(BitangentSet::kCount);
    for (auto& x : f) x = std::polar(std::pow(10.0, log_mag(rng)), angle(rng));
    return f;
}

CMatrix random_invertible(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        CMatrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = Complex(u(rng), u(rng));
        Eigen::JacobiSVD<CMatrix> svd(a);
        const auto s = svd.singularValues();
        if (s(2) > 0.0 && s(0) / s(2) < 100.0) return a;
    }
}

std::pair<bool, std::string> counts() {
    const auto even = enumerate(3, ParityFilter::Even).size();
    const auto odd = enumerate(3, ParityFilter::Odd).size();
    const int d = 4;
    const int bitangent_formula = d * (d - 2) * (d * d - 9) / 2;
    const auto aronhold = enumerate_aronhold_sets().size();
    std::ostringstream os;
    os << "even=" << even << " odd=" << odd << " bitangents(d=4)=" << bitangent_formula << " aronhold=" << aronhold;
    return {even == 36 && odd == 28 && bitangent_formula == 28 && odd == static_cast<std::size_t>(bitangent_formula) &&
                aronhold == 288,
            os.str()};
}

std::pair<bool, std::string> weber_identity(std::uint64_t seed) {
    const auto trials = weber_verify_random(50, seed);
    double worst = 0.0;
    for (const auto& t : trials) worst = std::max(worst, t.residual);
    return {trials.size() == 50 && worst < 1e-8, "50 trials, max residual " + sci(worst) + " (< 1e-8)"};
}

std::pair<bool, std::string> scale_independence(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_scale = 0.0;
    double worst_linear = 0.0;
    for (int t = 0; t < 20; ++t) {
        const BitangentSet lines = extract_bitangents(random_tau(rng(), 3, 0.3));
        const Fingerprint base = fingerprint_from_bitangents(lines);
        const auto factors = random_factors(rng);
        worst_scale = std::max(worst_scale,
                               compare_fingerprints(base, fingerprint_from_bitangents(lines.rescaled(factors))).max_deviation);
        worst_linear = std::max(worst_linear, compare_fingerprints(base, fingerprint_from_bitangents(
                                                                             lines.mapped(random_invertible(rng))))
                                                  .max_deviation);
    }
    return {worst_scale < 1e-8 && worst_linear < 1e-8,
            "rescaling " + sci(worst_scale) + ", linear substitution " + sci(worst_linear) + " (< 1e-8, 20 trials each)"};
}

std::pair<bool, std::string> scalar_collapse(std::uint64_t seed) {
    const auto report = transform_check(seed);
    const bool ok = report.cases.size() == 30 && report.max_theta_spread < 1e-8 && report.max_gradient_spread < 1e-8 &&
                    report.max_jacobian_spread < 1e-8;
    return {ok, "10 words x 3 tau: theta " + sci(report.max_theta_spread) + ", gradient " +
                    sci(report.max_gradient_spread) + ", jacobian " + sci(report.max_jacobian_spread) + " (< 1e-8)"};
}

std::pair<bool, std::string> theta4_invariance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const SiegelPoint tau = random_tau(rng(), 3, 0.3);
    const Fingerprint base = theta4_map(tau);
    const auto level2 = level2_generators(3);
    const std::vector<SiegelPoint> anchor{tau};
    double worst_invariance = 0.0;
    for (int k = 0; k < 5; ++k) {
        const auto gamma = random_conditioned_word(level2, 4, anchor, 0.05, rng);
        worst_invariance =
            std::max(worst_invariance, compare_fingerprints(base, theta4_map(act_tau(gamma, tau))).max_deviation);
    }
    double min_separation = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20; ++k) {
        const auto a = theta4_map(random_tau(rng(), 3, 0.3));
        const auto b = theta4_map(random_tau(rng(), 3, 0.3));
        min_separation = std::min(min_separation, compare_fingerprints(a, b).max_deviation);
    }
    double worst_agreement = 0.0;
    for (int k = 0; k < 5; ++k) {
        const SiegelPoint t = random_tau(rng(), 3, 0.3);
        worst_agreement = std::max(
            worst_agreement, compare_fingerprints(theta4_map(t), fingerprint_from_bitangents(extract_bitangents(t)))
                                 .max_deviation);
    }
    return {worst_invariance < 1e-8 && min_separation > 1e-3 && worst_agreement < 1e-7,
            "level-2 invariance " + sci(worst_invariance) + " (< 1e-8), min separation " + sci(min_separation) +
                " (> 1e-3), bitangent fingerprint vs theta4 " + sci(worst_agreement) + " (< 1e-7)"};
}

struct NumericalSuite {
    double worst_fd = 0.0;
    double worst_heat = 0.0;
    double worst_odd = 0.0;
    double least_syzygetic = std::numeric_limits<double>::infinity();
    double worst_syzygetic = 0.0;
    double least_azygetic = std::numeric_limits<double>::infinity();
};

NumericalSuite numerical_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NumericalSuite out;
    const auto odd = enumerate(3, ParityFilter::Odd);
    const auto all = enumerate(3, ParityFilter::All);
    const double h = 1e-5;
    std::uniform_real_distribution<double> small(-0.2, 0.2);
    for (int t = 0; t < 3; ++t) {
        const SiegelPoint tau = random_tau(rng(), 3, 0.3);
        const ThetaTable table = evaluate_all(tau);

        ThetaOptions tight;
        tight.tol = 1e-14;
        const double r = choose_radius(tau, h, 0, tight);
        for (const auto& n : odd) {
            const CVector& grad = table.gradient(n);
            CVector fd(3);
            for (int j = 0; j < 3; ++j) {
                CVector step = CVector::Zero(3);
                step[j] = h;
                fd[j] = (theta_at_radius(n, tau, step, r).value - theta_at_radius(n, tau, -step, r).value) / (2.0 * h);
            }
            out.worst_fd = std::max(out.worst_fd, (fd - grad).norm() / grad.norm());
        }

        for (int k = 0; k < 4; ++k) {
            const auto& m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
            CVector z(3);
            for (int j = 0; j < 3; ++j) z[j] = Complex(small(rng), small(rng));
            out.worst_heat = std::max(out.worst_heat, heat_check(m, tau, z));
        }

        double even_scale = 0.0;
        for (const auto& m : enumerate(3, ParityFilter::Even)) even_scale = std::max(even_scale, std::abs(table.value(m)));
        for (const auto& n : odd) out.worst_odd = std::max(out.worst_odd, std::abs(table.value(n)) / even_scale);

        for (std::size_t i = 0; i < odd.size(); ++i)
            for (std::size_t j = i + 1; j < odd.size(); ++j)
                for (std::size_t k = j + 1; k < odd.size(); ++k) {
                    CMatrix rows(3, 3);
                    rows.row(0) = table.gradient(odd[i]).transpose();
                    rows.row(1) = table.gradient(odd[j]).transpose();
                    rows.row(2) = table.gradient(odd[k]).transpose();
                    const double scale = rows.row(0).norm() * rows.row(1).norm() * rows.row(2).norm();
                    const double rel = std::abs(rows.determinant()) / scale;
                    if (is_azygetic_triple(odd[i], odd[j], odd[k])) {
                        out.least_azygetic = std::min(out.least_azygetic, rel);
                    } else {
                        out.least_syzygetic = std::min(out.least_syzygetic, rel);
                        out.worst_syzygetic = std::max(out.worst_syzygetic, rel);
                    }
                }
    }
    return out;
}

std::pair<bool, std::string> decision_procedure(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto level2 = level2_generators(3);
    int same = 0;
    int different = 0;
    double worst_same = 0.0;
    double least_different = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20; ++k) {
        const SiegelPoint tau = random_tau(rng(), 3, 0.3);
        const std::vector<SiegelPoint> anchor{tau};
        const auto gamma = random_conditioned_word(level2, 4, anchor, 0.05, rng);
        const BitangentSet a = extract_bitangents(tau);
        const BitangentSet moved = extract_bitangents(act_tau(gamma, tau));
        const CMatrix back = automorphy_factor(gamma, tau).inverse();
        const BitangentSet b = moved.mapped(back).rescaled(random_factors(rng));
        const auto cmp = compare_curves(a, b);
        worst_same = std::max(worst_same, cmp.deviations.max_deviation);
        if (cmp.verdict == Verdict::Same) ++same;

        const auto other = compare_curves(a, extract_bitangents(random_tau(rng(), 3, 0.3)));
        least_different = std::min(least_different, other.deviations.max_deviation);
        if (other.verdict == Verdict::Different) ++different;
    }
    return {same == 20 && different == 20,
            "SAME " + std::to_string(same) + "/20 (max dev " + sci(worst_same) + "), DIFFERENT " +
                std::to_string(different) + "/20 (min dev " + sci(least_different) + ")"};
}

std::pair<bool, std::string> pair_coverage() {
    const auto even = enumerate(3, ParityFilter::Even);
    int found = 0;
    int valid = 0;
    for (const auto& m1 : even)
        for (const auto& m2 : even) {
            if (m1 == m2) continue;
            const AronholdSet s = aronhold_for_pair(m1, m2);
            ++found;
            if (s.sum == m1 && s.members[0] + s.members[1] + s.members[2] == m2 && is_aronhold_set(s.members)) ++valid;
        }
    return {found == 36 * 35 && valid == found,
            std::to_string(valid) + "/" + std::to_string(36 * 35) + " ordered even pairs covered"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(timed("1", "combinatorial counts", [] {
        const auto start = Clock::now();
        auto r = counts();
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        r.first = r.first && s < 5.0;
        return r;
    }));
    out.push_back(timed("2", "Weber identity", [&] { return weber_identity(seed); }));
    out.push_back(timed("3", "scale and coordinate independence", [&] { return scale_independence(seed + 1); }));
    out.push_back(timed("4", "transformation-law scalar collapse", [&] { return scalar_collapse(seed + 2); }));
    out.push_back(timed("5", "theta4 invariance and separation", [&] { return theta4_invariance(seed + 3); }));
    {
        NumericalSuite suite;
        const auto run = timed("6", "numerical analysis suite", [&] {
            suite = numerical_suite(seed + 4);
            return std::pair<bool, std::string>{true, ""};
        });
        if (!run.passed) {
            out.push_back(run);
        } else {
            const auto sub = [&](const char* id, std::string name, bool ok, std::string detail) {
                out.push_back(CriterionResult{id, std::move(name), ok, std::move(detail), run.seconds});
            };
            sub("6a", "gradient vs central differences", suite.worst_fd < 1e-6,
                "max relative " + sci(suite.worst_fd) + " (< 1e-6)");
            sub("6b", "heat equation", suite.worst_heat < 1e-6, "max residual " + sci(suite.worst_heat) + " (< 1e-6)");
            sub("6c", "odd theta constants vanish", suite.worst_odd < 1e-10,
                "max scaled |theta| " + sci(suite.worst_odd) + " (< 1e-10)");
            sub("6d", "syzygetic-triple Jacobians vanish", suite.worst_syzygetic < 1e-8,
                "relative |D| in [" + sci(suite.least_syzygetic) + ", " + sci(suite.worst_syzygetic) + "] (< 1e-8)");
            sub("6e", "azygetic-triple Jacobians nonzero", suite.least_azygetic > 1e-6,
                "min relative |D| " + sci(suite.least_azygetic) + " (> 1e-6)");
        }
    }
    out.push_back(timed("7", "end-to-end decision procedure", [&] { return decision_procedure(seed + 5); }));
    out.push_back(timed("8", "Aronhold pair coverage", [] { return pair_coverage(); }));
    return out;
}

}  // namespace thetaquartic
