#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thetaquartic/bitangents.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/theta.hpp"
#include "thetaquartic/weber.hpp"

namespace thetaquartic {

// Shared drivers for the CLI and the acceptance suite.

struct WeberTrial {
    Characteristic m1;
    Characteristic m2;
    Complex lhs;
    Complex rhs;
    double residual = 0.0;  // |lhs - rhs| / |lhs|
};

struct WeberVerifyOptions {
    ThetaOptions theta;
    double conditioning = 0.3;
    // Perturbs the bitangent n1 of each trial before evaluating the right
    // side; used to check that the harness notices broken input.
    bool corrupt = false;
};

WeberTrial weber_trial(const SiegelPoint& tau, const Characteristic& m1, const Characteristic& m2,
                       const WeberVerifyOptions& opts);

// `trials` independent (tau, distinct even pair) draws.
std::vector<WeberTrial> weber_verify_random(int trials, std::uint64_t seed, const WeberVerifyOptions& opts = {});

// Every pair (m, reference) with m even and m != reference at a single tau.
std::vector<WeberTrial> weber_verify_tau(const SiegelPoint& tau, const WeberVerifyOptions& opts = {});

std::pair<Characteristic, Characteristic> random_even_pair(std::mt19937_64& rng);

// Random word over `gens` whose action keeps every tau in `taus` above the
// given smallest imaginary eigenvalue. Word length is uniform in [1, max_length].
SymplecticMatrix random_conditioned_word(std::span<const SymplecticMatrix> gens, int max_length,
                                         std::span<const SiegelPoint> taus, double min_lambda, std::mt19937_64& rng);

struct TransformCase {
    int word = 0;
    int tau = 0;
    double theta_spread = 0.0;     // 36 even theta-constant ratios
    double gradient_spread = 0.0;  // 28 gradient ratios
    double jacobian_spread = 0.0;  // azygetic-triple D ratios
};

struct TransformReport {
    std::vector<TransformCase> cases;
    double max_theta_spread = 0.0;
    double max_gradient_spread = 0.0;
    double max_jacobian_spread = 0.0;
};

struct TransformOptions {
    int words = 10;
    int taus = 3;
    int jacobian_pairs = 10;
    int max_word_length = 8;
    double min_lambda = 0.05;
    double conditioning = 0.3;
    ThetaOptions theta;
};

// Checks the transformation laws for theta constants, odd gradients and
// Jacobian determinants modulo the common factor kappa(gamma) det(c tau + d)^{1/2}.
TransformReport transform_check(std::uint64_t seed, const TransformOptions& opts = {});

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1);

}  // namespace thetaquartic
