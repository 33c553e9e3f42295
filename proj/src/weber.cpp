#include "thetaquartic/weber.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thetaquartic {

namespace {

Characteristic sum3(const AronholdSet& s) { return s.members[0] + s.members[1] + s.members[2]; }

// One factor D[u, v, w] with its degeneracy check.
Complex checked_det(const WeberInstance& inst, WeberLabel u, WeberLabel v, WeberLabel w, bool denominator) {
    const Complex d = det3(inst[u], inst[v], inst[w]);
    if (denominator) {
        const double scale = inst[u].norm() * inst[v].norm() * inst[w].norm();
        if (!(std::abs(d) > kDegenerateDeterminant * scale)) {
            const auto name = [&](WeberLabel l) { return inst.labels[static_cast<std::size_t>(l)].to_string(); };
            throw Error(ErrorCode::DegenerateDenominator,
                        "Weber denominator D[" + name(u) + ", " + name(v) + ", " + name(w) + "] vanishes for (m1, m2) = (" +
                            inst.m1.to_string() + ", " + inst.m2.to_string() + ")");
        }
    }
    return d;
}

}  // namespace

Complex det3(const CVector& u, const CVector& v, const CVector& w) {
    if (u.size() != 3 || v.size() != 3 || w.size() != 3) throw Error(ErrorCode::InvalidArgument, "det3 needs 3-vectors");
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1]) + w[0] * (u[1] * v[2] - u[2] * v[1]);
}

WeberInstance make_weber_instance(const BitangentSet& lines, const Characteristic& m1, const Characteristic& m2,
                                  const AronholdSet& aronhold) {
    if (!is_even(m1) || !is_even(m2) || m1 == m2)
        throw Error(ErrorCode::InvalidArgument, "Weber's formula needs two distinct even characteristics");
    if (aronhold.sum != m1 || sum3(aronhold) != m2)
        throw Error(ErrorCode::InvalidArgument, "Aronhold set does not match the pair (m1, m2)");
    const auto n_ij = complete_aronhold_labels(aronhold);
    WeberInstance inst{m1, m2, aronhold, {}, {}};
    inst.labels = {aronhold.members[0], aronhold.members[1], aronhold.members[2],
                   n_ij.at({0, 1}),     n_ij.at({0, 2}),     n_ij.at({1, 2})};
    for (std::size_t i = 0; i < inst.labels.size(); ++i) inst.beta[i] = lines.coords(inst.labels[i]);
    return inst;
}

Complex weber_rhs(const WeberInstance& inst) {
    using enum WeberLabel;
    const Complex numerator = checked_det(inst, N1, N2, N3, false) * checked_det(inst, N1, N12, N13, false) *
                              checked_det(inst, N12, N2, N23, false) * checked_det(inst, N13, N23, N3, false);
    const Complex denominator = checked_det(inst, N23, N13, N12, true) * checked_det(inst, N23, N3, N2, true) *
                                checked_det(inst, N3, N13, N1, true) * checked_det(inst, N2, N1, N12, true);
    return static_cast<double>(parity(inst.m1 + inst.m2)) * numerator / denominator;
}

Complex weber_lhs(const Characteristic& m1, const Characteristic& m2, const SiegelPoint& tau,
                  const ThetaOptions& opts) {
    if (!is_even(m1) || !is_even(m2)) throw Error(ErrorCode::InvalidArgument, "weber_lhs needs even characteristics");
    const ThetaTable table = evaluate_all(tau, opts);
    require_nonvanishing_even(table);
    const Complex q = table.value(m1) / table.value(m2);
    return (q * q) * (q * q);
}

Fingerprint fingerprint_from_bitangents(const BitangentSet& lines) {
    const auto even = enumerate(3, ParityFilter::Even);
    Fingerprint fp;
    fp.reference = even.front();
    fp.quotients[fp.reference] = Complex(1.0, 0.0);
    for (const auto& m : even) {
        if (m == fp.reference) continue;
        const WeberInstance inst = make_weber_instance(lines, m, fp.reference, aronhold_for_pair(m, fp.reference));
        fp.quotients[m] = weber_rhs(inst);
    }
    return fp;
}

double aronhold_choice_consistency(const BitangentSet& lines, const Characteristic& m1, const Characteristic& m2,
                                   std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "need at least one Aronhold set");
    const auto sets = aronhold_sets_for_pair(m1, m2, k);
    if (sets.size() < k) {
        std::ostringstream os;
        os << "only " << sets.size() << " Aronhold sets exist for (" << m1.to_string() << ", " << m2.to_string() << ")";
        throw Error(ErrorCode::NotFound, os.str());
    }
    std::vector<Complex> values;
    values.reserve(sets.size());
    for (const auto& s : sets) values.push_back(weber_rhs(make_weber_instance(lines, m1, m2, s)));
    double spread = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            spread = std::max(spread, std::abs(values[i] - values[j]) /
                                          std::max(std::abs(values[i]), std::abs(values[j])));
    return spread;
}

CurveComparison compare_curves(const BitangentSet& a, const BitangentSet& b, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "comparison tolerance must be positive");
    CurveComparison out;
    out.tolerance = tol;
    out.first = fingerprint_from_bitangents(a);
    out.second = fingerprint_from_bitangents(b);
    out.deviations = compare_fingerprints(out.first, out.second);
    out.verdict = out.deviations.max_deviation <= tol ? Verdict::Same : Verdict::Different;
    return out;
}

}  // namespace thetaquartic
