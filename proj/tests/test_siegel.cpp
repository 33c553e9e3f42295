#include <complex>
#include <random>

#include "doctest.h"

#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/symplectic.hpp"

using namespace thetaquartic;

namespace {

const Complex I(0.0, 1.0);

CMatrix i_identity() { return I * CMatrix::Identity(3, 3); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

IntMatrix symmetric_b() { return IntMatrix{{1, -2, 0}, {-2, 3, 1}, {0, 1, -1}}; }

}  // namespace

TEST_CASE("validate_siegel") {
    CHECK(validate_siegel(i_identity()).min_imag_eigenvalue() == doctest::Approx(1.0));

    CMatrix negative = i_identity();
    negative(2, 2) = Complex(0.3, -0.5);
    CHECK(code_of([&] { validate_siegel(negative); }) == ErrorCode::NotPositiveDefinite);

    CMatrix asym = i_identity();
    asym(0, 1) = 0.25;
    CHECK(code_of([&] { validate_siegel(asym); }) == ErrorCode::NotSymmetric);

    CHECK(code_of([&] { validate_siegel(CMatrix::Identity(2, 3)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { validate_siegel(I * CMatrix::Identity(9, 9)); }) == ErrorCode::UnsupportedGenus);

    CMatrix semidefinite = i_identity();
    semidefinite(0, 0) = Complex(0.0, 0.0);
    CHECK(code_of([&] { validate_siegel(semidefinite); }) == ErrorCode::NotPositiveDefinite);
}

TEST_CASE("integer symplectic matrices") {
    CHECK(is_symplectic(IntMatrix::identity(6)));
    CHECK(is_symplectic(standard_form(3)));
    for (long n = 1; n <= 4; ++n) CHECK(is_in_level(IntMatrix::identity(6), n));
    CHECK(is_in_level(standard_form(3), 1));
    CHECK_FALSE(is_in_level(standard_form(3), 2));
    CHECK_FALSE(is_symplectic(IntMatrix{{1, 1}, {0, 2}}));
    CHECK_THROWS_AS(SymplecticMatrix(IntMatrix{{1, 1}, {0, 2}}), Error);
    CHECK_THROWS_AS(SymplecticMatrix::translation(IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), Error);

    const SymplecticMatrix t = SymplecticMatrix::translation(symmetric_b());
    CHECK(t * t.inverse() == SymplecticMatrix::identity(3));
    const SymplecticMatrix j = SymplecticMatrix::standard_j(3);
    CHECK(j * j * j * j == SymplecticMatrix::identity(3));

    const auto level2 = level2_generators(3);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        const SymplecticMatrix a = random_word(level2, 5, rng);
        const SymplecticMatrix b = random_word(level2, 5, rng);
        CHECK(is_in_level((a * b).matrix(), 2));
    }
}

TEST_CASE("long words stay exact") {
    const auto gens = generators(3);
    CHECK(gens.size() == 1 + 6);
    CHECK(gens.front() == SymplecticMatrix::standard_j(3));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        const SymplecticMatrix w = random_word(gens, 20, rng);
        CHECK(is_symplectic(w.matrix()));
        CHECK(w * w.inverse() == SymplecticMatrix::identity(3));
    }
    // Powers of a translation times J grow quickly; cpp_int keeps them exact.
    SymplecticMatrix big = SymplecticMatrix::identity(3);
    const SymplecticMatrix step = SymplecticMatrix::translation(symmetric_b()) * SymplecticMatrix::standard_j(3);
    for (int k = 0; k < 60; ++k) big = big * step;
    CHECK(is_symplectic(big.matrix()));
    CHECK(big.matrix().max_abs() > Integer(1) << 64);
}

TEST_CASE("action on the Siegel upper half space") {
    const SiegelPoint tau = random_tau(17);
    CHECK((act_tau(SymplecticMatrix::identity(3), tau).tau() - tau.tau()).norm() < 1e-14);

    const SymplecticMatrix t = SymplecticMatrix::translation(symmetric_b());
    CHECK((act_tau(t, tau).tau() - (tau.tau() + to_complex(symmetric_b()))).norm() < 1e-13);

    // J tau = -tau^{-1}.
    const CMatrix expected = -tau.tau().inverse();
    CHECK((act_tau(SymplecticMatrix::standard_j(3), tau).tau() - expected).norm() < 1e-12);

    std::mt19937_64 rng(23);
    const auto gens = generators(3);
    for (int k = 0; k < 10; ++k) {
        const SymplecticMatrix g1 = random_word(gens, 4, rng);
        const SymplecticMatrix g2 = random_word(gens, 4, rng);
        const CMatrix lhs = act_tau(g1 * g2, tau).tau();
        const CMatrix rhs = act_tau(g1, act_tau(g2, tau)).tau();
        CHECK((lhs - rhs).norm() / lhs.norm() < 1e-10);
    }
}

TEST_CASE("phi: exact eighths") {
    const auto all = enumerate(3);
    const SymplecticMatrix id = SymplecticMatrix::identity(3);
    for (const auto& m : all) CHECK(phi(m, id).eighths == 0);

    std::mt19937_64 rng(29);
    const auto gens = generators(3);
    for (int k = 0; k < 10; ++k) {
        const SymplecticMatrix w = random_word(gens, 10, rng);
        CHECK(phi(Characteristic::zero(3), w).eighths == 0);
    }

    // Pure translation: 8 phi = -m'^T B m' + 2 diag(B)^T m' (mod 8).
    const IntMatrix b = symmetric_b();
    const SymplecticMatrix t = SymplecticMatrix::translation(b);
    for (const auto& m : all) {
        long quad = 0;
        long lin = 0;
        for (int i = 0; i < 3; ++i) {
            lin += static_cast<long>(b(i, i)) * m.top(i);
            for (int j = 0; j < 3; ++j) quad += m.top(i) * static_cast<long>(b(i, j)) * m.top(j);
        }
        const long expected = ((-quad + 2 * lin) % 8 + 8) % 8;
        CHECK(phi(m, t).eighths == expected);
    }
}

TEST_CASE("chi is an eighth root of unity") {
    std::mt19937_64 rng(31);
    const auto gens = generators(3);
    for (const auto& m : enumerate(3)) CHECK(std::abs(chi(m, SymplecticMatrix::identity(3)) - 1.0) < 1e-15);
    for (int k = 0; k < 10; ++k) {
        const SymplecticMatrix w = random_word(gens, 10, rng);
        for (const auto& m : enumerate(3)) {
            const Complex c = chi(m, w);
            CHECK(std::abs(std::abs(c) - 1.0) < 1e-15);
            CHECK(std::abs(std::pow(c, 8) - 1.0) < 1e-12);
            CHECK(std::abs(c - std::polar(1.0, 2.0 * 3.14159265358979323846 * phi(m, w).value())) < 1e-14);
        }
    }
}

TEST_CASE("random_tau") {
    const SiegelPoint a = random_tau(99);
    const SiegelPoint b = random_tau(99);
    CHECK(a.tau() == b.tau());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (double rho : {0.01, 0.3, 0.9, 1.0}) {
            const SiegelPoint t = random_tau(seed, 3, rho);
            CHECK(t.min_imag_eigenvalue() >= 1.0 - rho - 1e-12);
            CHECK_NOTHROW(validate_siegel(t.tau()));
        }
    }
    CHECK_THROWS_AS(random_tau(1, 3, 0.0), Error);
    CHECK_THROWS_AS(random_tau(1, 3, 1.5), Error);
    CHECK(random_tau(1, 2).genus() == 2);
}

TEST_CASE("automorphy factor") {
    const SiegelPoint tau = random_tau(41);
    CHECK((automorphy_factor(SymplecticMatrix::identity(3), tau) - CMatrix::Identity(3, 3)).norm() < 1e-15);
    CHECK((automorphy_factor(SymplecticMatrix::standard_j(3), tau) - tau.tau()).norm() < 1e-15);
}
