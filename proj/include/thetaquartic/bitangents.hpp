#pragma once

#include <optional>
#include <vector>

#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/siegel.hpp"
#include "thetaquartic/theta.hpp"

namespace thetaquartic {

// Coefficients (l_1, l_2, l_3) of the line l_1 z_1 + l_2 z_2 + l_3 z_3 = 0,
// labeled by the odd characteristic whose theta gradient produced it.
struct BitangentLine {
    Characteristic ch;
    CVector coords;
};

// The 28 bitangents of a plane quartic, one per odd genus-3 characteristic,
// stored in lexicographic order of the labels. Coordinates are kept exactly
// as given; every consumer treats them projectively.
class BitangentSet {
public:
    static constexpr std::size_t kCount = 28;

    // Throws InvalidArgument unless the labels are exactly the 28 odd
    // characteristics, every vector is nonzero, and no two lines coincide.
    explicit BitangentSet(std::vector<BitangentLine> lines, std::optional<CMatrix> source_tau = std::nullopt);

    const std::vector<BitangentLine>& lines() const noexcept { return lines_; }
    const CVector& coords(const Characteristic& n) const;
    const std::optional<CMatrix>& source_tau() const noexcept { return source_tau_; }

    // Every coordinate vector replaced by a * v.
    BitangentSet mapped(const CMatrix& a) const;
    // Line i (in stored order) multiplied by factors[i].
    BitangentSet rescaled(std::span<const Complex> factors) const;

private:
    std::vector<BitangentLine> lines_;
    std::optional<CMatrix> source_tau_;
};

// n''/2 + tau n'/2. With this point theta_0(tau, z + point) is a nowhere
// vanishing exponential times theta_n(tau, z), so both share a gradient
// direction at z = 0 when n is odd.
CVector two_torsion_point(const Characteristic& n, const SiegelPoint& tau);

// |p x q| / (|p| |q|) for complex 3-vectors; 0 iff projectively equal.
double projective_distance(const CVector& p, const CVector& q);

BitangentSet extract_bitangents(const SiegelPoint& tau, const ThetaOptions& opts = {});
BitangentSet bitangents_from_table(const ThetaTable& table, std::optional<CMatrix> source_tau = std::nullopt);

// Projective distance between grad theta_0 at the two-torsion point of n and
// grad theta_n at the origin. Throws InvalidArgument for even n.
double gauss_consistency(const Characteristic& n, const SiegelPoint& tau, const ThetaOptions& opts = {});

}  // namespace thetaquartic
