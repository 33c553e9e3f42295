#include "thetaquartic/bitangents.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace thetaquartic {

namespace {

constexpr double kCoincidentLines = 1e-12;
constexpr double kZeroGradient = 1e-12;

}  // namespace

BitangentSet::BitangentSet(std::vector<BitangentLine> lines, std::optional<CMatrix> source_tau)
    : lines_(std::move(lines)), source_tau_(std::move(source_tau)) {
    if (lines_.size() != kCount)
        throw Error(ErrorCode::InvalidArgument,
                    "a bitangent set has 28 lines, got " + std::to_string(lines_.size()));
    std::sort(lines_.begin(), lines_.end(), [](const auto& a, const auto& b) { return a.ch < b.ch; });
    const auto odd = enumerate(3, ParityFilter::Odd);
    for (std::size_t i = 0; i < kCount; ++i) {
        if (lines_[i].ch.genus() != 3 || lines_[i].ch != odd[i])
            throw Error(ErrorCode::InvalidArgument,
                        "bitangent labels must be the 28 odd genus-3 characteristics, each once");
        if (lines_[i].coords.size() != 3)
            throw Error(ErrorCode::InvalidArgument, "bitangent " + lines_[i].ch.to_string() + " needs 3 coordinates");
        if (!lines_[i].coords.allFinite() || lines_[i].coords.norm() == 0.0)
            throw Error(ErrorCode::ZeroVector, "bitangent " + lines_[i].ch.to_string() + " has a zero or non-finite vector");
    }
    for (std::size_t i = 0; i < kCount; ++i)
        for (std::size_t j = i + 1; j < kCount; ++j)
            if (projective_distance(lines_[i].coords, lines_[j].coords) < kCoincidentLines)
                throw Error(ErrorCode::InvalidArgument, "bitangents " + lines_[i].ch.to_string() + " and " +
                                                            lines_[j].ch.to_string() + " coincide");
}

const CVector& BitangentSet::coords(const Characteristic& n) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), n, [](const auto& l, const auto& c) { return l.ch < c; });
    if (it == lines_.end() || it->ch != n) throw Error(ErrorCode::NotFound, "no bitangent labeled " + n.to_string());
    return it->coords;
}

BitangentSet BitangentSet::mapped(const CMatrix& a) const {
    if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorCode::InvalidArgument, "coordinate map must be 3x3");
    std::vector<BitangentLine> out = lines_;
    for (auto& l : out) l.coords = a * l.coords;
    return BitangentSet(std::move(out));
}

BitangentSet BitangentSet::rescaled(std::span<const Complex> factors) const {
    if (factors.size() != kCount) throw Error(ErrorCode::InvalidArgument, "need 28 rescaling factors");
    std::vector<BitangentLine> out = lines_;
    for (std::size_t i = 0; i < kCount; ++i) out[i].coords *= factors[i];
    return BitangentSet(std::move(out), source_tau_);
}

CVector two_torsion_point(const Characteristic& n, const SiegelPoint& tau) {
    const int g = tau.genus();
    if (n.genus() != g) throw Error(ErrorCode::GenusMismatch, "characteristic and tau differ in genus");
    CVector top(g);
    CVector bottom(g);
    for (int i = 0; i < g; ++i) {
        top[i] = n.top(i) / 2.0;
        bottom[i] = n.bottom(i) / 2.0;
    }
    return bottom + tau.tau() * top;
}

double projective_distance(const CVector& p, const CVector& q) {
    if (p.size() != q.size()) throw Error(ErrorCode::InvalidArgument, "projective_distance: size mismatch");
    const double np = p.norm();
    const double nq = q.norm();
    if (np == 0.0 || nq == 0.0) throw Error(ErrorCode::ZeroVector, "projective_distance of a zero vector");
    // Norm of all 2x2 minors of [p q]; equals |p x q| in dimension 3.
    double wedge = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        for (Eigen::Index j = i + 1; j < p.size(); ++j) wedge += std::norm(p[i] * q[j] - p[j] * q[i]);
    return std::min(1.0, std::sqrt(wedge) / (np * nq));
}

BitangentSet bitangents_from_table(const ThetaTable& table, std::optional<CMatrix> source_tau) {
    if (table.genus != 3) throw Error(ErrorCode::UnsupportedGenus, "bitangents need genus 3");
    require_nonvanishing_even(table);
    const auto odd = enumerate(3, ParityFilter::Odd);
    double scale = 0.0;
    for (const auto& n : odd) scale = std::max(scale, table.gradient(n).norm());
    std::vector<BitangentLine> lines;
    lines.reserve(odd.size());
    for (const auto& n : odd) {
        const CVector& v = table.gradient(n);
        if (!(v.norm() > kZeroGradient * scale))
            throw Error(ErrorCode::ZeroGradient, "theta gradient for " + n.to_string() + " vanishes numerically");
        lines.push_back({n, v});
    }
    return BitangentSet(std::move(lines), std::move(source_tau));
}

BitangentSet extract_bitangents(const SiegelPoint& tau, const ThetaOptions& opts) {
    if (tau.genus() != 3) throw Error(ErrorCode::UnsupportedGenus, "bitangents need genus 3");
    return bitangents_from_table(evaluate_all(tau, opts), tau.tau());
}

double gauss_consistency(const Characteristic& n, const SiegelPoint& tau, const ThetaOptions& opts) {
    if (!is_odd(n)) throw Error(ErrorCode::InvalidArgument, "gauss_consistency needs an odd characteristic");
    const CVector point = two_torsion_point(n, tau);
    const auto shifted = grad_theta(Characteristic::zero(tau.genus()), tau, point, opts);
    const auto origin = grad_theta0(n, tau, opts);
    return projective_distance(shifted.vector, origin.vector);
}

}  // namespace thetaquartic
