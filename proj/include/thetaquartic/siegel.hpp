#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/symplectic.hpp"

namespace thetaquartic {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

// A validated point of the Siegel upper half-space: symmetric, with positive
// definite imaginary part. The smallest eigenvalue of Im(tau) is cached since
// it controls the truncation radius of every theta series.
class SiegelPoint {
public:
    int genus() const noexcept { return static_cast<int>(tau_.rows()); }
    const CMatrix& tau() const noexcept { return tau_; }
    double min_imag_eigenvalue() const noexcept { return lambda_min_; }

private:
    friend SiegelPoint validate_siegel(const CMatrix& tau);
    SiegelPoint(CMatrix tau, double lambda_min) : tau_(std::move(tau)), lambda_min_(lambda_min) {}

    CMatrix tau_;
    double lambda_min_ = 0.0;
};

// Throws NotSymmetric or NotPositiveDefinite.
SiegelPoint validate_siegel(const CMatrix& tau);

CMatrix to_complex(const IntMatrix& m);

// c tau + d.
CMatrix automorphy_factor(const SymplecticMatrix& gamma, const SiegelPoint& tau);

// (a tau + b)(c tau + d)^{-1}. Throws SingularAutomorphy.
SiegelPoint act_tau(const SymplecticMatrix& gamma, const SiegelPoint& tau);

// J together with the translations by the elementary symmetric matrices
// E_ii and E_ij + E_ji; these generate Sp(2g, Z).
std::vector<SymplecticMatrix> generators(int genus);

// Upper and lower translations by twice the elementary symmetric matrices,
// all of which lie in the level-2 subgroup.
std::vector<SymplecticMatrix> level2_generators(int genus);

// Product of `length` generators drawn uniformly.
SymplecticMatrix random_word(std::span<const SymplecticMatrix> gens, int length, std::mt19937_64& rng);

// phi_m(gamma) mod 1, held exactly as a multiple of 1/8.
struct EighthPhase {
    int eighths = 0;  // in [0, 8)

    double value() const noexcept { return eighths / 8.0; }
    friend bool operator==(const EighthPhase&, const EighthPhase&) = default;
};

EighthPhase phi(const Characteristic& m, const SymplecticMatrix& gamma);

// exp(2 pi i phi_m(gamma)). The m-independent eighth root kappa(gamma) is
// deliberately left out.
Complex chi(const Characteristic& m, const SymplecticMatrix& gamma);

// tau = S + iG with S uniform in [-1/2, 1/2] and G = I + rho * P, where P is a
// random symmetric matrix of spectral norm at most 1.
SiegelPoint random_tau(std::uint64_t seed, int genus = 3, double conditioning = 0.3);

}  // namespace thetaquartic
