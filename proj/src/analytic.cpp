#include "fenchel/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace fenchel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// p2 for kappa = 1; the general value is kappa^{3/2} times this.
const double kCuspMomentum = 2.0 / (3.0 * std::sqrt(3.0));

// |27 p^2 - 4| below this uses the root solver instead of the cube-root
// closed forms (the radicand vanishes at the cusps and the formulas lose
// precision there).
constexpr double kCuspBand = 1e-8;

void require_finite_kappa(ModelParams params) {
    if (!std::isfinite(params.kappa))
        throw std::invalid_argument("ModelParams: kappa must be finite");
}

void require_nonconvex(ModelParams params, const char* op) {
    require_finite_kappa(params);
    if (params.kappa <= 0.0)
        throw convex_regime_error(std::string(op) + ": requires kappa > 0");
}

double newton_polish(double t, double a, double b) {
    // One guarded Newton step on t^3 + a t + b.
    for (int i = 0; i < 2; ++i) {
        const double d = 3.0 * t * t + a;
        if (std::abs(d) < 1e-8) break;
        t -= (t * t * t + a * t + b) / d;
    }
    return t;
}

// Real roots of the depressed cubic t^3 + a t + b = 0, ascending,
// double/triple roots reported once with multiplicity.
std::vector<RealRoot> solve_depressed_cubic(double a, double b) {
    const double disc = -4.0 * a * a * a - 27.0 * b * b;
    const double scale = std::max(1.0, std::abs(4.0 * a * a * a) + 27.0 * b * b);

    if (a == 0.0 && b == 0.0) return {{0.0, 3}};

    if (disc > 1e-11 * scale) {
        // Three distinct real roots (requires a < 0).
        const double m = 2.0 * std::sqrt(-a / 3.0);
        const double arg = std::clamp(3.0 * b / (a * m), -1.0, 1.0);
        const double theta = std::acos(arg);
        double r0 = m * std::cos(theta / 3.0);                  // highest
        double r1 = m * std::cos((theta - 2.0 * kPi) / 3.0);    // middle
        double r2 = m * std::cos((theta - 4.0 * kPi) / 3.0);    // lowest
        r0 = newton_polish(r0, a, b);
        r1 = newton_polish(r1, a, b);
        r2 = newton_polish(r2, a, b);
        return {{r2, 1}, {r1, 1}, {r0, 1}};
    }

    if (disc >= -1e-11 * scale) {
        // Double root r_d plus simple root -2 r_d (a < 0 here, since the
        // a = b = 0 case was handled above).
        const double rd = std::copysign(std::sqrt(std::max(0.0, -a / 3.0)), b);
        const double rs = -2.0 * rd;
        if (rd < rs) return {{rd, 2}, {rs, 1}};
        return {{rs, 1}, {rd, 2}};
    }

    // One real root; Cardano with the cancellation-free cube root.
    const double D = std::sqrt(b * b / 4.0 + a * a * a / 27.0);
    double t;
    if (b == 0.0) {
        t = 0.0;  // a > 0, so the only real root is 0
    } else if (b < 0.0) {
        const double u = std::cbrt(-b / 2.0 + D);
        t = u - a / (3.0 * u);
    } else {
        const double v = -std::cbrt(b / 2.0 + D);
        t = v - a / (3.0 * v);
    }
    return {{newton_polish(t, a, b), 1}};
}

// Principal cube root of 9p + sqrt(3) sqrt(27 p^2 - 4) as a complex number.
// For p < 0 the real radicand branch is rewritten as 12 / (9p - sqrt(...))
// to avoid the cancellation that grows with |p|.
std::complex<double> cube_root_kernel(double p) {
    const double rad = 27.0 * p * p - 4.0;
    std::complex<double> w;
    if (rad >= 0.0) {
        const double s = std::sqrt(3.0 * rad);  // = sqrt(3)*sqrt(rad)
        w = (p >= 0.0) ? std::complex<double>(9.0 * p + s, 0.0)
                       : std::complex<double>(12.0 / (9.0 * p - s), 0.0);
    } else {
        w = std::complex<double>(9.0 * p, std::sqrt(-3.0 * rad));
    }
    const double r = std::abs(w);
    const double theta = std::arg(w);
    return std::polar(std::cbrt(r), theta / 3.0);
}

double lagrangian_unit(double v) { return lagrangian_eval(v, ModelParams{1.0}); }

TangentPoint make_tangent(double p, double v, double residue) {
    TangentPoint tp;
    tp.momentum = p;
    tp.velocity = v;
    tp.intercept = lagrangian_unit(v) - p * v;
    tp.imaginary_residue = residue;
    return tp;
}

// Rescaling between a kappa > 0 model and the kappa = 1 closed forms:
// v = sqrt(kappa) u, p = kappa^{3/2} q, L and H scale by kappa^2.
struct Rescale {
    double sv;  // sqrt(kappa)
    double sp;  // kappa^{3/2}
    double sh;  // kappa^2

    explicit Rescale(ModelParams params)
        : sv(std::sqrt(params.kappa)), sp(params.kappa * sv), sh(params.kappa * params.kappa) {}
};

}  // namespace

double PolynomialLagrangian::operator()(double v) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + *it;
    return acc;
}

double PolynomialLagrangian::derivative(double v) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 1;)
        acc = acc * v + static_cast<double>(i) * coeffs[i];
    return acc;
}

int PolynomialLagrangian::degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0.0) return static_cast<int>(i);
    return 0;
}

double lagrangian_eval(double v, ModelParams params) {
    require_finite_kappa(params);
    const double v2 = v * v;
    return 0.25 * v2 * v2 - 0.5 * params.kappa * v2;
}

double legendre_map(double v, ModelParams params) {
    require_finite_kappa(params);
    return v * v * v - params.kappa * v;
}

double multivalued_hamiltonian(double v, ModelParams params) {
    require_finite_kappa(params);
    const double v2 = v * v;
    return 0.75 * v2 * v2 - 0.5 * params.kappa * v2;
}

std::vector<RealRoot> invert_legendre_map(double p, ModelParams params) {
    require_finite_kappa(params);
    if (!std::isfinite(p)) throw std::invalid_argument("invert_legendre_map: p must be finite");
    return solve_depressed_cubic(-params.kappa, -p);
}

std::pair<double, double> cusp_momenta(ModelParams params) {
    require_nonconvex(params, "cusp_momenta");
    const double p2 = 2.0 * params.kappa * std::sqrt(params.kappa / 3.0) / 3.0;
    return {-p2, p2};
}

TangentPoint tangent_point_right(double p) {
    if (!(p >= 0.0)) throw std::domain_error("tangent_point_right: p must be >= 0");
    const double rad = 27.0 * p * p - 4.0;
    if (rad > kCuspBand) {
        const std::complex<double> c = cube_root_kernel(p);
        static const double k1 = std::cbrt(2.0 / 3.0);
        static const double k2 = std::cbrt(1.0 / 18.0);
        const double v = k1 / c.real() + c.real() * k2;  // c is real here
        return make_tangent(p, v, 0.0);
    }
    // At and below the cusp momentum the supporting line touches at the
    // largest real root of the Legendre map.
    const auto roots = invert_legendre_map(p, ModelParams{1.0});
    return make_tangent(p, roots.back().value, 0.0);
}

TangentPoint tangent_point_left(double p) {
    if (!(p < 0.0)) throw std::domain_error("tangent_point_left: p must be < 0");
    const std::complex<double> c = cube_root_kernel(p);
    static const double k12 = std::cbrt(12.0);   // 2^{2/3} 3^{1/3}
    static const double k144 = std::cbrt(144.0); // 2^{4/3} 3^{2/3}
    static const std::complex<double> wm(-1.0, -std::sqrt(3.0));  // -(1 + sqrt(3) i)
    static const std::complex<double> wp(-1.0, std::sqrt(3.0));   // -(1 - sqrt(3) i)
    const std::complex<double> v = wm / (k12 * c) + wp * c / k144;
    const double residue = std::abs(v.imag());

    const double rad = 27.0 * p * p - 4.0;
    if (std::abs(rad) < kCuspBand) {
        // Ill-conditioned radicand: polish the smallest real root instead.
        const auto roots = invert_legendre_map(p, ModelParams{1.0});
        double r = roots.front().value;
        double lo = r - 1e-3, hi = r + 1e-3;
        auto fn = [p](double t) { return t * t * t - t - p; };
        if (fn(lo) * fn(hi) < 0.0) {
            for (int i = 0; i < 40; ++i) {
                const double mid = 0.5 * (lo + hi);
                (fn(lo) * fn(mid) <= 0.0 ? hi : lo) = mid;
            }
            r = 0.5 * (lo + hi);
        }
        r = newton_polish(r, -1.0, -p);
        return make_tangent(p, r, residue);
    }
    return make_tangent(p, v.real(), residue);
}

double hamiltonian_closed_form(double p) {
    if (!std::isfinite(p)) throw std::invalid_argument("hamiltonian_closed_form: p must be finite");
    const TangentPoint tp = (p >= 0.0) ? tangent_point_right(p) : tangent_point_left(p);
    return -tp.intercept;
}

std::variant<double, ClosedInterval> hamiltonian_subgradient(double p) {
    if (p == 0.0) return ClosedInterval{-1.0, 1.0};
    return (p > 0.0) ? tangent_point_right(p).velocity : tangent_point_left(p).velocity;
}

double revised_lagrangian(double v) {
    if (std::abs(v) <= 1.0) return -0.25;
    return lagrangian_unit(v);
}

double momentum_of_velocity_revised(double v) {
    if (std::abs(v) <= 1.0) return 0.0;
    return v * v * v - v;
}

VacuumState vacuum_lft() {
    VacuumState s;
    s.energy = 0.25;
    s.momenta = {0.0};
    s.velocities = ClosedInterval{-1.0, 1.0};
    return s;
}

VacuumState vacuum_cusp() {
    VacuumState s;
    s.energy = -1.0 / 12.0;
    const double v0 = 1.0 / std::sqrt(3.0);
    s.momenta = {-kCuspMomentum, kCuspMomentum};
    s.velocities = std::vector<double>{v0, -v0};  // paired with momenta
    return s;
}

TangentPoint tangent_point_right(double p, ModelParams params) {
    require_nonconvex(params, "tangent_point_right");
    const Rescale rs(params);
    TangentPoint tp = tangent_point_right(p / rs.sp);
    tp.momentum = p;
    tp.velocity *= rs.sv;
    tp.intercept *= rs.sh;
    tp.imaginary_residue *= rs.sv;
    return tp;
}

TangentPoint tangent_point_left(double p, ModelParams params) {
    require_nonconvex(params, "tangent_point_left");
    const Rescale rs(params);
    TangentPoint tp = tangent_point_left(p / rs.sp);
    tp.momentum = p;
    tp.velocity *= rs.sv;
    tp.intercept *= rs.sh;
    tp.imaginary_residue *= rs.sv;
    return tp;
}

double hamiltonian_closed_form(double p, ModelParams params) {
    require_nonconvex(params, "hamiltonian_closed_form");
    const Rescale rs(params);
    return rs.sh * hamiltonian_closed_form(p / rs.sp);
}

std::variant<double, ClosedInterval> hamiltonian_subgradient(double p, ModelParams params) {
    require_nonconvex(params, "hamiltonian_subgradient");
    const Rescale rs(params);
    auto g = hamiltonian_subgradient(p / rs.sp);
    if (std::holds_alternative<double>(g)) return rs.sv * std::get<double>(g);
    const auto iv = std::get<ClosedInterval>(g);
    return ClosedInterval{rs.sv * iv.lo, rs.sv * iv.hi};
}

double revised_lagrangian(double v, ModelParams params) {
    require_nonconvex(params, "revised_lagrangian");
    const Rescale rs(params);
    return rs.sh * revised_lagrangian(v / rs.sv);
}

double momentum_of_velocity_revised(double v, ModelParams params) {
    require_nonconvex(params, "momentum_of_velocity_revised");
    const Rescale rs(params);
    return rs.sp * momentum_of_velocity_revised(v / rs.sv);
}

VacuumState vacuum_lft(ModelParams params) {
    require_nonconvex(params, "vacuum_lft");
    const Rescale rs(params);
    VacuumState s = vacuum_lft();
    s.energy *= rs.sh;
    s.velocities = ClosedInterval{-rs.sv, rs.sv};
    return s;
}

VacuumState vacuum_cusp(ModelParams params) {
    require_nonconvex(params, "vacuum_cusp");
    const Rescale rs(params);
    VacuumState s = vacuum_cusp();
    s.energy *= rs.sh;
    for (double& p : s.momenta) p *= rs.sp;
    for (double& v : std::get<std::vector<double>>(s.velocities)) v *= rs.sv;
    return s;
}

}  // namespace fenchel
