#pragma once

#include <complex>
#include <map>

#include "thetaquartic/characteristics.hpp"

namespace thetaquartic {

// The projective point [theta_m^4]_{m even}, normalized so that the entry at
// `reference` (the lexicographically first even characteristic) is exactly 1.
struct Fingerprint {
    Characteristic reference;
    std::map<Characteristic, std::complex<double>> quotients;

    std::complex<double> at(const Characteristic& m) const;
};

struct FingerprintComparison {
    std::map<Characteristic, double> deviations;
    double max_deviation = 0.0;
};

// Per-coordinate relative deviation |p - q| / max(|p|, |q|) after both
// fingerprints are rescaled to be 1 at a.reference.
FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

}  // namespace thetaquartic
