#include <random>

#include "doctest.h"

#include "thetaquartic/bitangents.hpp"
#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/harness.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/theta.hpp"
#include "thetaquartic/weber.hpp"

using namespace thetaquartic;

namespace {

const Complex I(0.0, 1.0);

CVector vec(Complex a, Complex b, Complex c) {
    CVector v(3);
    v << a, b, c;
    return v;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::vector<Complex> random_factors(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> exponent(-3.0, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::vector<Complex> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::polar(std::pow(10.0, exponent(rng)), angle(rng)));
    return out;
}

}  // namespace

TEST_CASE("det3") {
    const CVector e1 = vec(1, 0, 0);
    const CVector e2 = vec(0, 1, 0);
    const CVector e3 = vec(0, 0, 1);
    CHECK(det3(e1, e2, e3) == Complex(1.0));
    const CVector u = vec(1.0, I, 2.0);
    const CVector v = vec(-0.5, 3.0, Complex(1.0, 1.0));
    const CVector w = vec(0.0, 2.0, -I);
    CHECK(det3(u, u, w) == Complex(0.0));
    CHECK(std::abs(det3(u, v, w) + det3(v, u, w)) < 1e-15);
    CHECK(std::abs(det3(u, v, w) + det3(u, w, v)) < 1e-15);
}

TEST_CASE("Weber's formula at random period matrices") {
    for (const auto& t : weber_verify_random(15, 2024)) CHECK(t.residual < 1e-8);
}

TEST_CASE("Weber's formula for all pairs against the reference") {
    const auto trials = weber_verify_tau(random_tau(77));
    CHECK(trials.size() == 35);
    for (const auto& t : trials) CHECK(t.residual < 1e-8);
}

TEST_CASE("right-hand side ignores coordinates") {
    const SiegelPoint tau = random_tau(31);
    const BitangentSet lines = extract_bitangents(tau);
    std::mt19937_64 rng(8);
    const auto [m1, m2] = random_even_pair(rng);
    const AronholdSet s = aronhold_for_pair(m1, m2);
    const Complex base = weber_rhs(make_weber_instance(lines, m1, m2, s));

    const BitangentSet scaled = lines.rescaled(random_factors(rng, 28));
    CHECK(rel(weber_rhs(make_weber_instance(scaled, m1, m2, s)), base) < 1e-10);

    CMatrix a(3, 3);
    a << 2.0, 1.0, 0.0, Complex(0.0, 1.0), 1.0, 0.5, 0.0, -1.0, 3.0;
    CHECK(rel(weber_rhs(make_weber_instance(lines.mapped(a), m1, m2, s)), base) < 1e-10);
}

TEST_CASE("weber_lhs") {
    const SiegelPoint tau = random_tau(32);
    const auto even = enumerate(3, ParityFilter::Even);
    CHECK(std::abs(weber_lhs(even[3], even[3], tau) - 1.0) < 1e-15);
    const Complex coarse = weber_lhs(even[1], even[4], tau, {1e-8, 64.0});
    const Complex fine = weber_lhs(even[1], even[4], tau);
    CHECK(rel(coarse, fine) < 1e-6);
    CHECK_THROWS_AS(weber_lhs(Characteristic::parse("100|100"), even[0], tau), Error);
}

TEST_CASE("make_weber_instance checks its Aronhold set") {
    const BitangentSet lines = extract_bitangents(random_tau(33));
    const auto even = enumerate(3, ParityFilter::Even);
    const AronholdSet s = aronhold_for_pair(even[2], even[5]);
    CHECK_NOTHROW(make_weber_instance(lines, even[2], even[5], s));
    CHECK_THROWS_AS(make_weber_instance(lines, even[5], even[2], s), Error);
    CHECK_THROWS_AS(make_weber_instance(lines, even[2], even[6], s), Error);
}

TEST_CASE("degenerate denominators are reported") {
    const BitangentSet lines = extract_bitangents(random_tau(34));
    const auto even = enumerate(3, ParityFilter::Even);
    const AronholdSet s = aronhold_for_pair(even[0], even[1]);
    WeberInstance inst = make_weber_instance(lines, even[0], even[1], s);
    // Put b23 in the span of b12 and b13: D[b23, b13, b12] = 0.
    inst.beta[static_cast<std::size_t>(WeberLabel::N23)] =
        inst[WeberLabel::N12] + 2.0 * inst[WeberLabel::N13];
    try {
        weber_rhs(inst);
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("different Aronhold sets agree") {
    const BitangentSet lines = extract_bitangents(random_tau(35));
    const auto even = enumerate(3, ParityFilter::Even);
    CHECK(aronhold_choice_consistency(lines, even[0], even[7], 1) == 0.0);
    CHECK(aronhold_choice_consistency(lines, even[0], even[7], 6) < 1e-7);
    CHECK(aronhold_choice_consistency(lines, even[9], even[3], 6) < 1e-7);
    std::mt19937_64 rng(2);
    const BitangentSet scaled = lines.rescaled(random_factors(rng, 28));
    CHECK(aronhold_choice_consistency(scaled, even[9], even[3], 6) < 1e-7);
    CHECK_THROWS_AS(aronhold_choice_consistency(lines, even[0], even[7], 100000), Error);
}

TEST_CASE("cocycle consistency of quotients") {
    // q(a, c) = q(a, b) q(b, c) whenever all three are built from bitangents.
    const SiegelPoint tau = random_tau(36);
    const BitangentSet lines = extract_bitangents(tau);
    std::mt19937_64 rng(12);
    const auto even = enumerate(3, ParityFilter::Even);
    std::uniform_int_distribution<std::size_t> pick(0, even.size() - 1);
    auto q = [&](const Characteristic& a, const Characteristic& b) {
        return weber_rhs(make_weber_instance(lines, a, b, aronhold_for_pair(a, b)));
    };
    for (int k = 0; k < 20; ++k) {
        std::size_t i = pick(rng), j = pick(rng), l = pick(rng);
        while (j == i) j = pick(rng);
        while (l == i || l == j) l = pick(rng);
        CHECK(rel(q(even[i], even[l]), q(even[i], even[j]) * q(even[j], even[l])) < 1e-8);
    }
}

TEST_CASE("fingerprint from bitangents equals theta^4") {
    const SiegelPoint tau = random_tau(37);
    const BitangentSet lines = extract_bitangents(tau);
    const Fingerprint from_lines = fingerprint_from_bitangents(lines);
    CHECK(from_lines.quotients.size() == 36);
    CHECK(compare_fingerprints(from_lines, theta4_map(tau)).max_deviation < 1e-7);
}

TEST_CASE("curve comparison") {
    const SiegelPoint tau = random_tau(38);
    const BitangentSet lines = extract_bitangents(tau);
    std::mt19937_64 rng(3);

    const CurveComparison self = compare_curves(lines, lines.rescaled(random_factors(rng, 28)));
    CHECK(self.verdict == Verdict::Same);
    CHECK(self.tolerance == kDefaultCompareTol);

    CMatrix a = CMatrix::Identity(3, 3);
    a(0, 2) = Complex(0.5, -0.25);
    a(2, 1) = 1.5;
    CHECK(compare_curves(lines, lines.mapped(a)).verdict == Verdict::Same);

    // Same curve, different period matrix: a level-2 translation keeps every
    // label on its own line.
    const SymplecticMatrix g = SymplecticMatrix::translation(IntMatrix{{2, 0, 0}, {0, 0, 2}, {0, 2, 2}});
    CHECK(compare_curves(lines, extract_bitangents(act_tau(g, tau))).verdict == Verdict::Same);

    const CurveComparison other = compare_curves(lines, extract_bitangents(random_tau(39)));
    CHECK(other.verdict == Verdict::Different);
    CHECK(other.deviations.max_deviation > 1e-3);
}
