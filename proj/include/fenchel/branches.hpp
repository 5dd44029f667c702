#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "fenchel/analytic.hpp"

namespace fenchel {

enum class RootSelector { Lowest, Middle, Highest };

std::string_view to_string(RootSelector s);

// One branch of the multi-valued Hamiltonian: a closed momentum interval
// together with the root of the Legendre map the branch follows.  At a cusp
// momentum the merging double root belongs to both adjacent branches.
struct Branch {
    double p_lo = 0.0;  // -inf allowed
    double p_hi = 0.0;  // +inf allowed
    RootSelector selector = RootSelector::Lowest;
    std::string_view label;  // phi3 / phi2 / phi1

    bool contains(double p) const { return p >= p_lo && p <= p_hi; }
};

// The three branches of the swallow-tail Hamiltonian for kappa > 0:
//   phi3: lowest root on (-inf, p2],
//   phi2: middle root on [p1, p2],
//   phi1: highest root on [p1, +inf).
struct BranchSet {
    ModelParams params;
    double p1 = 0.0;
    double p2 = 0.0;
    std::array<Branch, 3> branches;  // phi3, phi2, phi1

    // Velocity of the selected root at momentum p.  Throws std::domain_error
    // if the selected root does not exist there.
    double velocity(RootSelector s, double p) const;

    // Branch value of the multi-valued Hamiltonian at momentum p.
    double hamiltonian(RootSelector s, double p) const;

    bool defined(RootSelector s, double p) const;
};

// Throws convex_regime_error for kappa <= 0.
BranchSet enumerate_branches(ModelParams params);

// Parametric trace (f(v), 3/4 v^4 - kappa/2 v^2) of the full multi-valued
// curve, including the swallow tail inside [p1, p2].
std::vector<std::pair<double, double>> swallow_tail_curve(const std::vector<double>& v_grid,
                                                          ModelParams params);

// The branched momentum remap xi(p).  Applying every applicable branch
// yields three xi values for p strictly inside (p1, p2) -- the remap leaves
// the Hamiltonian multi-valued, which is exactly what the audit below
// certifies.
struct XiRemap {
    double p1 = 0.0;
    double p2 = 0.0;

    static XiRemap for_model(ModelParams params);  // from cusp_momenta
};

// All xi values produced by the applicable remap branches at momentum p,
// ascending, exact duplicates collapsed:
//   xi = p - p2 + p1   for p <= p2,
//   xi = -p + p2 + p1  for p1 <= p <= p2,
//   xi = p + p2 - p1   for p >= p1.
std::vector<double> xi_remap(double p, const XiRemap& remap);

// Number of distinct real velocities solving v^3 - kappa v = -xi: 3 strictly
// inside (p1, p2), 1 strictly outside, 2 at the endpoints.
int xi_multiplicity_audit(double xi, ModelParams params);

}  // namespace fenchel
