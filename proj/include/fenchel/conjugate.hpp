#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fenchel/analytic.hpp"

namespace fenchel {

// A function sampled on a strictly increasing grid.  The discrete
// Legendre-Fenchel transform below is exact for the piecewise-linear
// interpolant of these samples.
struct SampledFunction {
    std::vector<double> abscissae;
    std::vector<double> values;

    std::size_t size() const { return abscissae.size(); }
};

struct SlopeGrid {
    std::vector<double> slopes;  // strictly increasing

    std::size_t size() const { return slopes.size(); }
};

// Conjugate values H(p) = sup_i [p*x_i - f_i] on a slope grid, with the
// maximizing sample index per slope and a finiteness flag (always true for
// sampled inputs; cleared from an EffectiveDomain for analytic ones).
struct ConjugateResult {
    std::vector<double> slopes;
    std::vector<double> values;
    std::vector<std::size_t> argsup;
    std::vector<bool> finite;
};

// Lower convex hull description: the sample indices of the hull vertices,
// plus the intervals where the hull lies strictly below the samples (the
// coexistence/mixture regions of the common-tangent construction).
struct HullSegments {
    std::vector<std::size_t> breakpoints;
    std::vector<std::pair<double, double>> flat_regions;
};

enum class DomainKind { AllMomenta, SinglePoint, Empty };

// Momenta at which the conjugate of an analytic polynomial input is finite.
struct EffectiveDomain {
    DomainKind kind = DomainKind::AllMomenta;
    double point = 0.0;  // meaningful for SinglePoint only

    bool contains(double p) const;
};

// Throws std::invalid_argument if the grids violate their invariants
// (finiteness, strict monotonicity, N >= 2 for samples).
void validate(const SampledFunction& f);
void validate(const SlopeGrid& g);

// O(N*M) supremum scan; the reference oracle.  argsup is the smallest
// maximizing index.
ConjugateResult conjugate_bruteforce(const SampledFunction& f, const SlopeGrid& g);

// O(N + M): lower convex hull by a monotone-chain pass, then a merge of the
// sorted slope grid against the sorted hull-edge slopes.  Values match
// conjugate_bruteforce; argsup may differ only among exact ties.
ConjugateResult conjugate_fast(const SampledFunction& f, const SlopeGrid& g);

// Indices of the vertices of the lower convex hull of (x_i, f_i).
std::vector<std::size_t> lower_hull_indices(const SampledFunction& f);

// The lower convex hull evaluated on f's own abscissae (computed directly
// from the hull, not by two discrete transforms).  Idempotent.
SampledFunction biconjugate(const SampledFunction& f);

// Minimal intercept Y(p) = min_i [f_i - p*x_i] and the smallest attaining
// index; the conjugate value is -Y(p).
std::pair<double, std::size_t> supporting_line(const SampledFunction& f, double p);

// Decides finiteness of the conjugate from the polynomial's growth:
// superlinear coercive growth (even degree >= 2, positive leading
// coefficient) gives all momenta; degree <= 1 pins a single momentum;
// anything driving L to -infinity makes the conjugate infinite everywhere.
EffectiveDomain effective_domain(const PolynomialLagrangian& f);

// Hull breakpoints plus the maximal hull-edge intervals on which at least
// one interior sample sits more than 1e-9 above the hull.
HullSegments flat_regions(const SampledFunction& f);

// Marks slopes outside the domain as non-finite (used for analytic inputs,
// where the windowed discrete value is not the true conjugate).
void apply_effective_domain(ConjugateResult& r, const EffectiveDomain& dom);

}  // namespace fenchel
