#include "thetaquartic/siegel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace thetaquartic {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kDefiniteTol = 1e-12;

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

int mod8(const Integer& x) {
    Integer r = x % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r);
}

}  // namespace

SiegelPoint validate_siegel(const CMatrix& tau) {
    if (tau.rows() == 0 || tau.rows() != tau.cols())
        throw Error(ErrorCode::InvalidArgument, "period matrix must be square and nonempty");
    if (tau.rows() > kMaxGenus)
        throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(tau.rows()) + " is above the supported maximum");
    if (!tau.allFinite()) throw Error(ErrorCode::InvalidArgument, "period matrix has non-finite entries");
    const double scale = 1.0 + max_abs(tau);
    const double asym = max_abs(tau - tau.transpose());
    if (asym > kSymmetryTol * scale) {
        std::ostringstream os;
        os << "period matrix is not symmetric (max |tau - tau^T| = " << asym << ")";
        throw Error(ErrorCode::NotSymmetric, os.str());
    }
    const CMatrix sym = (tau + tau.transpose()) / 2.0;
    const RMatrix imag = sym.imag();

    Eigen::LLT<RMatrix> llt(imag);
    const double imag_scale = imag.cwiseAbs().maxCoeff();
    bool definite = llt.info() == Eigen::Success;
    if (definite) {
        const RMatrix l = llt.matrixL();
        const double min_pivot = (l.diagonal().array().square()).minCoeff();
        definite = min_pivot > kDefiniteTol * std::max(imag_scale, 1e-300);
    }
    if (!definite) throw Error(ErrorCode::NotPositiveDefinite, "imaginary part of the period matrix is not positive definite");

    Eigen::SelfAdjointEigenSolver<RMatrix> eig(imag, Eigen::EigenvaluesOnly);
    const double lambda_min = eig.eigenvalues().minCoeff();
    if (!(lambda_min > kDefiniteTol * imag_scale))
        throw Error(ErrorCode::NotPositiveDefinite, "imaginary part of the period matrix is nearly degenerate");
    return SiegelPoint(sym, lambda_min);
}

CMatrix to_complex(const IntMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j).convert_to<double>(), 0.0);
    return out;
}

CMatrix automorphy_factor(const SymplecticMatrix& gamma, const SiegelPoint& tau) {
    if (gamma.genus() != tau.genus()) throw Error(ErrorCode::GenusMismatch, "gamma and tau differ in genus");
    return to_complex(gamma.c()) * tau.tau() + to_complex(gamma.d());
}

SiegelPoint act_tau(const SymplecticMatrix& gamma, const SiegelPoint& tau) {
    const CMatrix denom = automorphy_factor(gamma, tau);
    const CMatrix numer = to_complex(gamma.a()) * tau.tau() + to_complex(gamma.b());
    Eigen::FullPivLU<CMatrix> lu(denom);
    lu.setThreshold(1e-13);
    if (!lu.isInvertible()) throw Error(ErrorCode::SingularAutomorphy, "c tau + d is numerically singular");
    // X (c tau + d) = (a tau + b)  <=>  (c tau + d)^T X^T = (a tau + b)^T
    Eigen::FullPivLU<CMatrix> lut(denom.transpose());
    const CMatrix x = lut.solve(numer.transpose()).transpose();
    const CMatrix sym = (x + x.transpose()) / 2.0;
    // Asymmetry here is rounding only; anything larger means the input was bad.
    if (max_abs(x - x.transpose()) > 1e-8 * (1.0 + max_abs(x)))
        throw Error(ErrorCode::NotSymmetric, "gamma . tau lost symmetry; check gamma");
    return validate_siegel(sym);
}

std::vector<SymplecticMatrix> generators(int genus) {
    std::vector<SymplecticMatrix> gens;
    gens.push_back(SymplecticMatrix::standard_j(genus));
    for (int i = 0; i < genus; ++i)
        for (int j = i; j < genus; ++j) {
            IntMatrix e(genus, genus);
            e(i, j) = 1;
            e(j, i) = 1;
            gens.push_back(SymplecticMatrix::translation(e));
        }
    return gens;
}

std::vector<SymplecticMatrix> level2_generators(int genus) {
    std::vector<SymplecticMatrix> gens;
    for (int i = 0; i < genus; ++i)
        for (int j = i; j < genus; ++j) {
            IntMatrix e(genus, genus);
            e(i, j) = 2;
            e(j, i) = 2;
            gens.push_back(SymplecticMatrix::translation(e));
            gens.push_back(SymplecticMatrix::lower_translation(e));
        }
    return gens;
}

SymplecticMatrix random_word(std::span<const SymplecticMatrix> gens, int length, std::mt19937_64& rng) {
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "random_word needs generators");
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    SymplecticMatrix word = SymplecticMatrix::identity(gens.front().genus());
    for (int k = 0; k < length; ++k) word = word * gens[pick(rng)];
    return word;
}

EighthPhase phi(const Characteristic& m, const SymplecticMatrix& gamma) {
    const int g = m.genus();
    if (gamma.genus() != g) throw Error(ErrorCode::GenusMismatch, "gamma and characteristic differ in genus");
    const IntMatrix a = gamma.a();
    const IntMatrix b = gamma.b();
    const IntMatrix c = gamma.c();
    const IntMatrix d = gamma.d();
    IntMatrix top(g, 1);
    IntMatrix bottom(g, 1);
    for (int i = 0; i < g; ++i) {
        top(i, 0) = m.top(i);
        bottom(i, 0) = m.bottom(i);
    }
    const IntMatrix top_t = top.transpose();
    const IntMatrix bottom_t = bottom.transpose();
    const IntMatrix bt = b.transpose();
    const IntMatrix at = a.transpose();

    // 8 phi = -(m'^T b^T d m' + m''^T a^T c m'' - 2 m'^T b^T c m'') + 2 diag(a b^T)^T (d m' - c m'')
    const Integer quad = (top_t * bt * d * top)(0, 0) + (bottom_t * at * c * bottom)(0, 0) -
                         2 * (top_t * bt * c * bottom)(0, 0);
    const IntMatrix abt = a * bt;
    const IntMatrix shifted = d * top - c * bottom;
    Integer linear = 0;
    for (int i = 0; i < g; ++i) linear += abt(i, i) * shifted(i, 0);
    return EighthPhase{mod8(-quad + 2 * linear)};
}

Complex chi(const Characteristic& m, const SymplecticMatrix& gamma) {
    // Exact values on the eighth roots of unity.
    static const double r = std::numbers::sqrt2 / 2.0;
    static const Complex roots[8] = {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}};
    return roots[phi(m, gamma).eighths];
}

SiegelPoint random_tau(std::uint64_t seed, int genus, double conditioning) {
    if (!(conditioning > 0.0 && conditioning <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "conditioning must lie in (0, 1]");
    if (genus < 1) throw Error(ErrorCode::UnsupportedGenus, "genus must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> half(-0.5, 0.5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    RMatrix s(genus, genus);
    RMatrix p(genus, genus);
    for (int i = 0; i < genus; ++i)
        for (int j = i; j < genus; ++j) {
            s(i, j) = s(j, i) = half(rng);
            p(i, j) = p(j, i) = unit(rng);
        }
    Eigen::SelfAdjointEigenSolver<RMatrix> eig(p, Eigen::EigenvaluesOnly);
    const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
    // Keep |P| strictly below 1 so that rho = 1 still gives a positive definite G.
    constexpr double kMaxPerturbation = 0.999;
    if (norm > kMaxPerturbation) p *= kMaxPerturbation / norm;
    const RMatrix g = RMatrix::Identity(genus, genus) + conditioning * p;
    CMatrix tau(genus, genus);
    tau.real() = s;
    tau.imag() = g;
    return validate_siegel(tau);
}

}  // namespace thetaquartic
