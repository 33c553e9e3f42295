#pragma once

#include <array>
#include <map>

#include "thetaquartic/bitangents.hpp"
#include "thetaquartic/characteristics.hpp"
#include "thetaquartic/fingerprint.hpp"
#include "thetaquartic/theta.hpp"

namespace thetaquartic {

// Determinant of the 3x3 matrix with columns u, v, w.
Complex det3(const CVector& u, const CVector& v, const CVector& w);

// Labels of the six bitangents entering Weber's determinant ratio.
enum class WeberLabel { N1 = 0, N2, N3, N12, N13, N23 };

struct WeberInstance {
    Characteristic m1;
    Characteristic m2;
    AronholdSet aronhold;
    std::array<Characteristic, 6> labels;  // indexed by WeberLabel
    std::array<CVector, 6> beta;           // indexed by WeberLabel

    const CVector& operator[](WeberLabel l) const { return beta[static_cast<std::size_t>(l)]; }
};

// Resolves n1, n2, n3, n12, n13, n23 of the Aronhold set to coordinate vectors
// of `lines`. Throws InvalidArgument unless the set has sum m1 and leading
// triple sum m2.
WeberInstance make_weber_instance(const BitangentSet& lines, const Characteristic& m1, const Characteristic& m2,
                                  const AronholdSet& aronhold);

// A determinant counts as zero below this multiple of its column norms.
inline constexpr double kDegenerateDeterminant = 1e-10;

// e(m1 + m2) D[b1,b2,b3] D[b1,b12,b13] D[b12,b2,b23] D[b13,b23,b3]
//          / (D[b23,b13,b12] D[b23,b3,b2] D[b3,b13,b1] D[b2,b1,b12]).
// Throws DegenerateDenominator.
Complex weber_rhs(const WeberInstance& inst);

// (theta_m1(tau) / theta_m2(tau))^4. Throws HyperellipticOrDegenerate.
Complex weber_lhs(const Characteristic& m1, const Characteristic& m2, const SiegelPoint& tau,
                  const ThetaOptions& opts = {});

// q_m = weber_rhs for (m, reference) over every even m, reference = first even.
Fingerprint fingerprint_from_bitangents(const BitangentSet& lines);

// Largest relative disagreement between weber_rhs evaluated on the first k
// admissible Aronhold sets for (m1, m2). Throws NotFound if fewer than k exist.
double aronhold_choice_consistency(const BitangentSet& lines, const Characteristic& m1, const Characteristic& m2,
                                   std::size_t k);

enum class Verdict { Same, Different };

struct CurveComparison {
    Verdict verdict = Verdict::Different;
    double tolerance = 0.0;
    Fingerprint first;
    Fingerprint second;
    FingerprintComparison deviations;
};

inline constexpr double kDefaultCompareTol = 1e-6;

CurveComparison compare_curves(const BitangentSet& a, const BitangentSet& b, double tol = kDefaultCompareTol);

}  // namespace thetaquartic
