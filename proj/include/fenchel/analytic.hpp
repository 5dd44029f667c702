#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

namespace fenchel {

// Thrown by operations that require a non-convex model (kappa > 0).
struct convex_regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters of the quartic model L(v) = v^4/4 - kappa*v^2/2.
// kappa > 0 is the non-convex regime; kappa <= 0 is accepted but the
// Legendre map is monotone and no cusps exist.
struct ModelParams {
    double kappa = 1.0;

    bool convex_regime() const { return kappa <= 0.0; }
};

// A 1-D polynomial Lagrangian L(v) = sum_i coeffs[i] * v^i.
struct PolynomialLagrangian {
    std::vector<double> coeffs;  // c0..cd

    double operator()(double v) const;
    double derivative(double v) const;
    int degree() const;  // after stripping trailing zero coefficients
};

// One real root of the Legendre map, with multiplicity (2 at a cusp
// momentum, 3 for the degenerate kappa = 0, p = 0 case).
struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
};

struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Tangency data of a supporting line of slope p touching the Lagrangian
// graph.  The intercept is Y = L(v) - p*v; the conjugate value is -Y.
// imaginary_residue is the magnitude of the imaginary part discarded when
// the tangent velocity comes out of the complex cube-root formula (exactly
// zero on the purely real evaluation path).
struct TangentPoint {
    double momentum = 0.0;
    double velocity = 0.0;
    double intercept = 0.0;
    double imaginary_residue = 0.0;
};

// Either a finite set of velocities (aligned index-wise with the momenta
// of the owning VacuumState) or a closed interval of admissible velocities.
using VelocitySet = std::variant<std::vector<double>, ClosedInterval>;

struct VacuumState {
    double energy = 0.0;
    std::vector<double> momenta;  // ascending
    VelocitySet velocities;
};

// ---------------------------------------------------------------------------
// Quartic model, general kappa.

double lagrangian_eval(double v, ModelParams params);     // v^4/4 - k v^2/2
double legendre_map(double v, ModelParams params);        // v^3 - k v
double multivalued_hamiltonian(double v, ModelParams params);  // 3/4 v^4 - k/2 v^2

// All real roots of v^3 - kappa*v = p, ascending, double roots reported
// once with multiplicity 2.
std::vector<RealRoot> invert_legendre_map(double p, ModelParams params);

// Extrema of the Legendre map: p1 = -2 kappa^{3/2}/(3 sqrt 3), p2 = -p1.
// Throws convex_regime_error for kappa <= 0.
std::pair<double, double> cusp_momenta(ModelParams params);

// ---------------------------------------------------------------------------
// Closed forms for the kappa = 1 model.
//
// A general kappa > 0 reduces exactly to kappa = 1 by the rescaling
//     v = sqrt(kappa) u,   p = kappa^{3/2} q,   L = kappa^2 L1(u),
// so H(p) = kappa^2 H1(p kappa^{-3/2}) and tangent velocities scale by
// sqrt(kappa).  The overloads taking ModelParams apply that rescaling and
// require kappa > 0; the plain functions are the kappa = 1 forms.

// Tangent point of the supporting line with slope p >= 0 (the rightmost
// tangency; real cube-root arithmetic above the cusp momentum, the largest
// real root of the Legendre map at and below it).
// Throws std::domain_error for p < 0.
TangentPoint tangent_point_right(double p);
TangentPoint tangent_point_right(double p, ModelParams params);

// Tangent point for p < 0 (the leftmost tangency), evaluated through the
// principal complex cube root; the discarded imaginary part is recorded in
// imaginary_residue.  Throws std::domain_error for p >= 0.
TangentPoint tangent_point_left(double p);
TangentPoint tangent_point_left(double p, ModelParams params);

// Single-valued Hamiltonian H(p) = p*v(p) - L(v(p)) with v(p) the right
// tangent velocity for p >= 0 and the left one for p < 0.  Continuous at 0
// (H(0) = 1/4) and even in p.
double hamiltonian_closed_form(double p);
double hamiltonian_closed_form(double p, ModelParams params);

// dH/dp where it exists (the tangent velocity); the full subdifferential
// interval [-1, 1] at the kink p = 0.
std::variant<double, ClosedInterval> hamiltonian_subgradient(double p);
std::variant<double, ClosedInterval> hamiltonian_subgradient(double p, ModelParams params);

// Convex hull of the quartic Lagrangian: flat at -1/4 on [-1, 1], the
// original quartic outside.
double revised_lagrangian(double v);
double revised_lagrangian(double v, ModelParams params);

// Momentum as a monotone function of velocity for the hull Lagrangian:
// 0 on [-1, 1], v^3 - v outside.
double momentum_of_velocity_revised(double v);
double momentum_of_velocity_revised(double v, ModelParams params);

// Vacuum of the single-valued Hamiltonian: H0 = 1/4 at p0 = 0, with the
// whole velocity interval [-1, 1] admissible.
VacuumState vacuum_lft();
VacuumState vacuum_lft(ModelParams params);

// Vacuum read off the cusps of the multi-valued Hamiltonian:
// H0 = -1/12 at p0 = +-2/(3 sqrt 3) with velocities -+1/sqrt(3).
VacuumState vacuum_cusp();
VacuumState vacuum_cusp(ModelParams params);

}  // namespace fenchel
