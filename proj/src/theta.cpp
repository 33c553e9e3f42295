#include "thetaquartic/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace thetaquartic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

const Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Sums of the lattice terms grouped by the residue class of 2x mod 4. The
// phase e^{pi i x.m''} only depends on that class, so one pass over the
// lattice serves every bottom vector m''.
struct LatticePass {
    int genus = 0;
    int order = 0;
    int classes = 0;
    std::vector<Complex> value;     // [class]
    std::vector<Complex> first;     // [class * g + j]: sum x_j * term
    std::vector<Complex> second;    // [(class * g + j) * g + l]: sum x_j x_l * term
    double rounding[3] = {0, 0, 0};  // sum |term| * |weight| * (1 + |phase|)
};

LatticePass run_pass(const CMatrix& tau, std::span<const int> top, const CVector& z, double radius, int order) {
    const int g = static_cast<int>(tau.rows());
    LatticePass pass;
    pass.genus = g;
    pass.order = order;
    pass.classes = 1 << (2 * g);
    pass.value.assign(static_cast<std::size_t>(pass.classes), Complex{});
    if (order >= 1) pass.first.assign(static_cast<std::size_t>(pass.classes * g), Complex{});
    if (order >= 2) pass.second.assign(static_cast<std::size_t>(pass.classes * g * g), Complex{});

    std::vector<int> lo(static_cast<std::size_t>(g));
    std::vector<int> hi(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        const double shift = top[static_cast<std::size_t>(i)] / 2.0;
        lo[static_cast<std::size_t>(i)] = static_cast<int>(std::ceil(-radius - shift - 1e-12));
        hi[static_cast<std::size_t>(i)] = static_cast<int>(std::floor(radius - shift + 1e-12));
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return pass;
    }

    // Upper triangle of tau, off-diagonal doubled, split into parts.
    RMatrix qr = RMatrix::Zero(g, g);
    RMatrix qi = RMatrix::Zero(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            const double w = (i == j) ? 1.0 : 2.0;
            qr(i, j) = w * tau(i, j).real();
            qi(i, j) = w * tau(i, j).imag();
        }

    std::vector<int> p(lo);
    std::vector<double> x(static_cast<std::size_t>(g));
    while (true) {
        int cls = 0;
        for (int i = 0; i < g; ++i) {
            const int two_x = 2 * p[static_cast<std::size_t>(i)] + top[static_cast<std::size_t>(i)];
            x[static_cast<std::size_t>(i)] = two_x / 2.0;
            cls |= (((two_x % 4) + 4) % 4) << (2 * i);
        }
        double re = 0.0;
        double im = 0.0;
        double xmax = 0.0;
        for (int i = 0; i < g; ++i) {
            const double xi = x[static_cast<std::size_t>(i)];
            xmax = std::max(xmax, std::abs(xi));
            for (int j = i; j < g; ++j) {
                const double xx = xi * x[static_cast<std::size_t>(j)];
                re += qr(i, j) * xx;
                im += qi(i, j) * xx;
            }
            re += 2.0 * xi * z[i].real();
            im += 2.0 * xi * z[i].imag();
        }
        // e^{pi i (re + i im)}
        const double magnitude = std::exp(-kPi * im);
        const double angle = kPi * re;
        const Complex term = std::polar(magnitude, angle);
        const double err_weight = magnitude * (1.0 + std::abs(angle));

        pass.value[static_cast<std::size_t>(cls)] += term;
        pass.rounding[0] += err_weight;
        if (order >= 1) {
            for (int j = 0; j < g; ++j)
                pass.first[static_cast<std::size_t>(cls * g + j)] += x[static_cast<std::size_t>(j)] * term;
            pass.rounding[1] += err_weight * 2.0 * kPi * xmax;
        }
        if (order >= 2) {
            for (int j = 0; j < g; ++j)
                for (int l = 0; l < g; ++l)
                    pass.second[static_cast<std::size_t>((cls * g + j) * g + l)] +=
                        (x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(l)]) * term;
            pass.rounding[2] += err_weight * 4.0 * kPi * kPi * xmax * xmax;
        }

        int i = 0;
        for (; i < g; ++i) {
            auto& pi = p[static_cast<std::size_t>(i)];
            if (pi < hi[static_cast<std::size_t>(i)]) {
                ++pi;
                break;
            }
            pi = lo[static_cast<std::size_t>(i)];
        }
        if (i == g) break;
    }
    return pass;
}

int phase_index(int cls, std::span<const int> bottom, int g) {
    int k = 0;
    for (int i = 0; i < g; ++i) {
        const int c = (cls >> (2 * i)) & 3;
        k += c * (((bottom[static_cast<std::size_t>(i)] % 4) + 4) % 4);
    }
    return k & 3;
}

struct Combined {
    Complex value;
    CVector gradient;
    CMatrix hessian;
};

Combined combine(const LatticePass& pass, std::span<const int> bottom) {
    const int g = pass.genus;
    Combined out;
    out.value = Complex{};
    if (pass.order >= 1) out.gradient = CVector::Zero(g);
    if (pass.order >= 2) out.hessian = CMatrix::Zero(g, g);
    for (int cls = 0; cls < pass.classes; ++cls) {
        const Complex phase = kPowersOfI[phase_index(cls, bottom, g)];
        out.value += phase * pass.value[static_cast<std::size_t>(cls)];
        if (pass.order >= 1)
            for (int j = 0; j < g; ++j) out.gradient[j] += phase * pass.first[static_cast<std::size_t>(cls * g + j)];
        if (pass.order >= 2)
            for (int j = 0; j < g; ++j)
                for (int l = 0; l < g; ++l)
                    out.hessian(j, l) += phase * pass.second[static_cast<std::size_t>((cls * g + j) * g + l)];
    }
    const Complex two_pi_i(0.0, 2.0 * kPi);
    if (pass.order >= 1) out.gradient *= two_pi_i;
    if (pass.order >= 2) out.hessian *= two_pi_i * two_pi_i;
    return out;
}

std::vector<int> bits_top(const Characteristic& m) {
    std::vector<int> v(static_cast<std::size_t>(m.genus()));
    for (int i = 0; i < m.genus(); ++i) v[static_cast<std::size_t>(i)] = m.top(i);
    return v;
}

std::vector<int> bits_bottom(const Characteristic& m) {
    std::vector<int> v(static_cast<std::size_t>(m.genus()));
    for (int i = 0; i < m.genus(); ++i) v[static_cast<std::size_t>(i)] = m.bottom(i);
    return v;
}

void check_z(const SiegelPoint& tau, const CVector& z) {
    if (z.size() != tau.genus()) throw Error(ErrorCode::GenusMismatch, "z has the wrong dimension");
}

void check_char(const SiegelPoint& tau, const Characteristic& m) {
    if (m.genus() != tau.genus()) throw Error(ErrorCode::GenusMismatch, "characteristic and tau differ in genus");
}

double imag_norm(const CVector& z) { return z.size() == 0 ? 0.0 : z.imag().norm(); }

double rounding_bound(const LatticePass& pass, int order) { return 8.0 * kEps * pass.rounding[order]; }

}  // namespace

double theta_tail_bound(int genus, double lambda_min, double radius, double imag_z_norm, int order) {
    if (!(lambda_min > 0.0)) return std::numeric_limits<double>::infinity();
    const double g = genus;
    const double drift = 2.0 * kPi * imag_z_norm * std::sqrt(g);
    double sum = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int step = 1; step < 1000000; ++step) {
        const double t = radius + 0.5 * step;
        // Shell |x|_inf = t holds at most 2g (2t+1)^{g-1} points, each with
        // |x|^2 >= t^2 and |x|_2 <= sqrt(g) t.
        const double log_term = std::log(2.0 * g) + (g - 1.0) * std::log(2.0 * t + 1.0) +
                                order * std::log(2.0 * kPi * t) - kPi * lambda_min * t * t + drift * t;
        const double term = std::exp(log_term);
        sum += term;
        if (term < previous && term <= 1e-17 * sum) break;
        previous = term;
    }
    return sum;
}

double choose_radius(const SiegelPoint& tau, double imag_z_norm, int order, const ThetaOptions& opts) {
    if (!(opts.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "theta tolerance must be positive");
    const double target = 0.5 * opts.tol;
    for (double r = 0.5; r <= opts.radius_cap; r += 0.5) {
        if (theta_tail_bound(tau.genus(), tau.min_imag_eigenvalue(), r, imag_z_norm, order) <= target) return r;
    }
    std::ostringstream os;
    os << "theta truncation radius exceeds cap " << opts.radius_cap << " (smallest eigenvalue of Im tau is "
       << tau.min_imag_eigenvalue() << ")";
    throw Error(ErrorCode::RadiusOverflow, os.str());
}

ThetaValue theta_representative(std::span<const int> top, std::span<const int> bottom, const SiegelPoint& tau,
                                const CVector& z, const ThetaOptions& opts) {
    if (static_cast<int>(top.size()) != tau.genus() || static_cast<int>(bottom.size()) != tau.genus())
        throw Error(ErrorCode::GenusMismatch, "characteristic and tau differ in genus");
    check_z(tau, z);
    const double s = imag_norm(z);
    const double r = choose_radius(tau, s, 0, opts);
    const LatticePass pass = run_pass(tau.tau(), top, z, r, 0);
    const Combined c = combine(pass, bottom);
    return {c.value, theta_tail_bound(tau.genus(), tau.min_imag_eigenvalue(), r, s, 0) + rounding_bound(pass, 0), r};
}

ThetaValue theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts) {
    check_char(tau, m);
    return theta_representative(bits_top(m), bits_bottom(m), tau, z, opts);
}

ThetaValue theta_constant(const Characteristic& m, const SiegelPoint& tau, const ThetaOptions& opts) {
    return theta(m, tau, CVector::Zero(tau.genus()), opts);
}

ThetaValue theta_at_radius(const Characteristic& m, const SiegelPoint& tau, const CVector& z, double radius) {
    check_char(tau, m);
    check_z(tau, z);
    const LatticePass pass = run_pass(tau.tau(), bits_top(m), z, radius, 0);
    const Combined c = combine(pass, bits_bottom(m));
    return {c.value,
            theta_tail_bound(tau.genus(), tau.min_imag_eigenvalue(), radius, imag_norm(z), 0) +
                rounding_bound(pass, 0),
            radius};
}

ThetaGradient grad_theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts) {
    check_char(tau, m);
    check_z(tau, z);
    const double s = imag_norm(z);
    const double r = choose_radius(tau, s, 1, opts);
    const LatticePass pass = run_pass(tau.tau(), bits_top(m), z, r, 1);
    const Combined c = combine(pass, bits_bottom(m));
    return {m, c.gradient, theta_tail_bound(tau.genus(), tau.min_imag_eigenvalue(), r, s, 1) + rounding_bound(pass, 1)};
}

ThetaGradient grad_theta0(const Characteristic& n, const SiegelPoint& tau, const ThetaOptions& opts) {
    if (!is_odd(n)) throw Error(ErrorCode::InvalidArgument, "grad_theta0 needs an odd characteristic, got " + n.to_string());
    return grad_theta(n, tau, CVector::Zero(tau.genus()), opts);
}

ThetaHessian hessian_theta_at_radius(const Characteristic& m, const SiegelPoint& tau, const CVector& z, double radius) {
    check_char(tau, m);
    check_z(tau, z);
    const LatticePass pass = run_pass(tau.tau(), bits_top(m), z, radius, 2);
    const Combined c = combine(pass, bits_bottom(m));
    return {c.hessian,
            theta_tail_bound(tau.genus(), tau.min_imag_eigenvalue(), radius, imag_norm(z), 2) +
                rounding_bound(pass, 2),
            radius};
}

ThetaHessian hessian_theta(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts) {
    check_z(tau, z);
    return hessian_theta_at_radius(m, tau, z, choose_radius(tau, imag_norm(z), 2, opts));
}

Complex jacobian_D(const Characteristic& n1, const Characteristic& n2, const Characteristic& n3,
                   const SiegelPoint& tau, const ThetaOptions& opts) {
    if (tau.genus() != 3) throw Error(ErrorCode::UnsupportedGenus, "jacobian_D is defined here for genus 3");
    if (n1 == n2 || n1 == n3 || n2 == n3)
        throw Error(ErrorCode::RepeatedCharacteristic, "jacobian_D needs distinct characteristics");
    CMatrix rows(3, 3);
    rows.row(0) = grad_theta0(n1, tau, opts).vector.transpose();
    rows.row(1) = grad_theta0(n2, tau, opts).vector.transpose();
    rows.row(2) = grad_theta0(n3, tau, opts).vector.transpose();
    return rows.determinant() / (kPi * kPi * kPi);
}

ThetaTable evaluate_all(const SiegelPoint& tau, const ThetaOptions& opts) {
    const int g = tau.genus();
    if (g > kMaxGenus) throw Error(ErrorCode::UnsupportedGenus, "genus too large for batched evaluation");
    const double r = choose_radius(tau, 0.0, 1, opts);
    const CVector zero = CVector::Zero(g);
    ThetaTable table;
    table.genus = g;
    table.radius_used = r;
    const std::size_t count = std::size_t{1} << (2 * g);
    table.values.resize(count);
    table.gradients.resize(count);
    double worst_rounding = 0.0;
    const std::uint32_t halves = 1U << g;
    for (std::uint32_t t = 0; t < halves; ++t) {
        const auto top = bits_top(Characteristic(g, t, 0));
        const LatticePass pass = run_pass(tau.tau(), top, zero, r, 1);
        worst_rounding = std::max(worst_rounding, rounding_bound(pass, 1));
        for (std::uint32_t b = 0; b < halves; ++b) {
            const Characteristic m(g, t, b);
            const Combined c = combine(pass, bits_bottom(m));
            table.values[m.index()] = c.value;
            table.gradients[m.index()] = c.gradient;
        }
    }
    table.tail_bound = theta_tail_bound(g, tau.min_imag_eigenvalue(), r, 0.0, 1) + worst_rounding;
    return table;
}

void require_nonvanishing_even(const ThetaTable& table) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    std::string worst;
    for (const auto& m : enumerate(table.genus, ParityFilter::Even)) {
        const double a = std::abs(table.value(m));
        hi = std::max(hi, a);
        if (a < lo) {
            lo = a;
            worst = m.to_string();
        }
    }
    if (!(lo >= kHyperellipticGuard * hi)) {
        std::ostringstream os;
        os << "even theta constant " << worst << " nearly vanishes (|theta| = " << lo << ", max " << hi
           << "); tau is hyperelliptic or degenerate";
        throw Error(ErrorCode::HyperellipticOrDegenerate, os.str());
    }
}

Fingerprint theta4_from_table(const ThetaTable& table) {
    require_nonvanishing_even(table);
    const auto even = enumerate(table.genus, ParityFilter::Even);
    Fingerprint fp;
    fp.reference = even.front();
    const Complex ref = table.value(fp.reference);
    for (const auto& m : even) {
        const Complex q = table.value(m) / ref;
        fp.quotients[m] = (m == fp.reference) ? Complex(1.0, 0.0) : (q * q) * (q * q);
    }
    return fp;
}

Fingerprint theta4_map(const SiegelPoint& tau, const ThetaOptions& opts) {
    return theta4_from_table(evaluate_all(tau, opts));
}

double heat_check(const Characteristic& m, const SiegelPoint& tau, const CVector& z, const ThetaOptions& opts,
                  double step) {
    check_char(tau, m);
    check_z(tau, z);
    const int g = tau.genus();
    // A common radius keeps the truncation identical at the shifted points, so
    // the difference quotient sees the series as one smooth function.
    ThetaOptions tight = opts;
    tight.tol = opts.tol * 1e-2;
    const double r = choose_radius(tau, imag_norm(z), 2, tight);
    const CMatrix hess = hessian_theta_at_radius(m, tau, z, r).matrix;
    const double scale = hess.cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "heat_check: second derivatives vanish at this z");
    double worst = 0.0;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            CMatrix shift = CMatrix::Zero(g, g);
            shift(i, j) = step;
            shift(j, i) = step;
            const SiegelPoint plus = validate_siegel(tau.tau() + shift);
            const SiegelPoint minus = validate_siegel(tau.tau() - shift);
            const Complex dtau = (theta_at_radius(m, plus, z, r).value - theta_at_radius(m, minus, z, r).value) /
                                 (2.0 * step);
            const Complex c = (i == j) ? Complex(0.0, 4.0 * kPi) : Complex(0.0, 2.0 * kPi);
            worst = std::max(worst, std::abs(hess(i, j) - c * dtau) / scale);
        }
    return worst;
}

std::complex<double> Fingerprint::at(const Characteristic& m) const {
    auto it = quotients.find(m);
    if (it == quotients.end()) throw Error(ErrorCode::NotFound, "fingerprint has no entry for " + m.to_string());
    return it->second;
}

FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b) {
    if (a.quotients.size() != b.quotients.size())
        throw Error(ErrorCode::InvalidArgument, "fingerprints have different sizes");
    const Complex na = a.at(a.reference);
    const Complex nb = b.at(a.reference);
    if (std::abs(na) == 0.0 || std::abs(nb) == 0.0)
        throw Error(ErrorCode::HyperellipticOrDegenerate, "fingerprint reference coordinate vanishes");
    FingerprintComparison out;
    for (const auto& [m, qa_raw] : a.quotients) {
        const Complex qa = qa_raw / na;
        const Complex qb = b.at(m) / nb;
        const double denom = std::max(std::abs(qa), std::abs(qb));
        const double dev = denom == 0.0 ? 0.0 : std::abs(qa - qb) / denom;
        out.deviations[m] = dev;
        out.max_deviation = std::max(out.max_deviation, dev);
    }
    return out;
}

}  // namespace thetaquartic
