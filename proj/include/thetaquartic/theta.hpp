#pragma once

#include <span>
#include <vector>

#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/fingerprint.hpp"
#include "thetaquartic/siegel.hpp"

namespace thetaquartic {

struct ThetaOptions {
    double tol = 1e-12;         // absolute bound on the truncation tail
    double radius_cap = 64.0;   // RadiusOverflow beyond this
};

struct ThetaValue {
    Complex value;
    double tail_bound = 0.0;    // truncation tail plus a floating-point estimate
    double radius_used = 0.0;
};

struct ThetaGradient {
    Characteristic ch;
    CVector vector;
    double tail_bound = 0.0;
};

struct ThetaHessian {
    CMatrix matrix;
    double tail_bound = 0.0;
    double radius_used = 0.0;
};

// Relative floor below which an even theta constant counts as vanishing.
inline constexpr double kHyperellipticGuard = 1e-8;

// Upper bound for the part of the theta series (differentiated `order` times)
// lying outside the box |p + m'/2|_inf <= radius.
double theta_tail_bound(int genus, double lambda_min, double radius, double imag_z_norm, int order);

// Smallest half-integral radius whose tail bound is at most tol.
// Throws RadiusOverflow.
double choose_radius(const SiegelPoint& tau, double imag_z_norm, int order, const ThetaOptions& opts);

// theta[m](tau, z) = sum_p e^{pi i (x^T tau x + 2 x^T (z + m''/2))}, x = p + m'/2.
ThetaValue theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts = {});
ThetaValue theta_constant(const Characteristic& m, const SiegelPoint& tau, const ThetaOptions& opts = {});

// Same series for an arbitrary integer representative [top|bottom].
ThetaValue theta_representative(std::span<const int> top, std::span<const int> bottom, const SiegelPoint& tau,
                                const CVector& z, const ThetaOptions& opts = {});

// Fixed box radius, no adaptivity.
ThetaValue theta_at_radius(const Characteristic& m, const SiegelPoint& tau, const CVector& z, double radius);

// z-gradient of the series at an arbitrary z and for any parity.
ThetaGradient grad_theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z,
                         const ThetaOptions& opts = {});

// Gradient at z = 0 of an odd theta function. Throws InvalidArgument for even n.
ThetaGradient grad_theta0(const Characteristic& n, const SiegelPoint& tau, const ThetaOptions& opts = {});

ThetaHessian hessian_theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z,
                           const ThetaOptions& opts = {});
ThetaHessian hessian_theta_at_radius(const Characteristic& m, const SiegelPoint& tau, const CVector& z,
                                     double radius);

// pi^{-3} det[grad theta_n1; grad theta_n2; grad theta_n3] at z = 0.
Complex jacobian_D(const Characteristic& n1, const Characteristic& n2, const Characteristic& n3,
                   const SiegelPoint& tau, const ThetaOptions& opts = {});

// Values and z-gradients at z = 0 for all 2^{2g} characteristics from one
// shared lattice pass. Indexed by Characteristic::index().
struct ThetaTable {
    int genus = 0;
    std::vector<Complex> values;
    std::vector<CVector> gradients;
    double tail_bound = 0.0;
    double radius_used = 0.0;

    const Complex& value(const Characteristic& m) const { return values[m.index()]; }
    const CVector& gradient(const Characteristic& m) const { return gradients[m.index()]; }
};

ThetaTable evaluate_all(const SiegelPoint& tau, const ThetaOptions& opts = {});

// Throws HyperellipticOrDegenerate when min |theta_m| over even m falls below
// kHyperellipticGuard * max |theta_m|.
void require_nonvanishing_even(const ThetaTable& table);

Fingerprint theta4_map(const SiegelPoint& tau, const ThetaOptions& opts = {});
Fingerprint theta4_from_table(const ThetaTable& table);

// Checks d^2 theta / dz_i dz_j = c_ij d theta / d tau_ij with c_ii = 4 pi i and
// c_ij = 2 pi i (i != j), the tau-derivative taken by central differences.
// Returns the largest residual relative to max |d^2 theta / dz_i dz_j|.
double heat_check(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts = {},
                  double step = 1e-5);

}  // namespace thetaquartic
