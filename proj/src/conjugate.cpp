#include "fenchel/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fenchel {

namespace {

constexpr double kFlatGap = 1e-9;  // hull-vs-sample gap that counts as genuine non-convexity

// Products of doubles are exact at 113 mantissa bits, which keeps the hull
// predicate and the chord interpolation consistent with each other down to
// well below one double ulp.
#if defined(__SIZEOF_FLOAT128__)
using wide_float = __float128;
#else
using wide_float = long double;
#endif

void require_increasing_finite(const std::vector<double>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]))
            throw std::invalid_argument(std::string(what) + ": entries must be finite");
        if (i > 0 && !(xs[i - 1] < xs[i]))
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
}

// Orientation of (a, b, c); positive when the middle point dips below the
// chord, i.e. the polyline turns convex there.
wide_float cross(const SampledFunction& f, std::size_t a, std::size_t b, std::size_t c) {
    const wide_float xa = f.abscissae[a], ya = f.values[a];
    const wide_float xb = f.abscissae[b], yb = f.values[b];
    const wide_float xc = f.abscissae[c], yc = f.values[c];
    return (xb - xa) * (yc - ya) - (yb - ya) * (xc - xa);
}

// Value of the chord l--r at x_i, rounded upward so that re-running the hull
// on the output never sees an interpolated point below its own chord; this
// is what makes biconjugate exactly idempotent.
double chord_value_round_up(const SampledFunction& f, std::size_t l, std::size_t r,
                            std::size_t i) {
    const wide_float xl = f.abscissae[l], xr = f.abscissae[r], xi = f.abscissae[i];
    const wide_float yl = f.values[l], yr = f.values[r];
    const wide_float exact = (yl * (xr - xi) + yr * (xi - xl)) / (xr - xl);
    double v = static_cast<double>(exact);
    if (static_cast<wide_float>(v) < exact)
        v = std::nextafter(v, std::numeric_limits<double>::infinity());
    return v;
}

}  // namespace

bool EffectiveDomain::contains(double p) const {
    switch (kind) {
        case DomainKind::AllMomenta: return true;
        case DomainKind::SinglePoint: return p == point;
        case DomainKind::Empty: return false;
    }
    return false;
}

void validate(const SampledFunction& f) {
    if (f.abscissae.size() < 2)
        throw std::invalid_argument("SampledFunction: need at least 2 samples");
    if (f.abscissae.size() != f.values.size())
        throw std::invalid_argument("SampledFunction: abscissae/values size mismatch");
    require_increasing_finite(f.abscissae, "SampledFunction abscissae");
    for (double y : f.values)
        if (!std::isfinite(y))
            throw std::invalid_argument("SampledFunction values: entries must be finite");
}

void validate(const SlopeGrid& g) {
    if (g.slopes.empty()) throw std::invalid_argument("SlopeGrid: must be non-empty");
    require_increasing_finite(g.slopes, "SlopeGrid");
}

ConjugateResult conjugate_bruteforce(const SampledFunction& f, const SlopeGrid& g) {
    validate(f);
    validate(g);
    const std::size_t n = f.size(), m = g.size();
    ConjugateResult r;
    r.slopes = g.slopes;
    r.values.resize(m);
    r.argsup.resize(m);
    r.finite.assign(m, true);
    for (std::size_t j = 0; j < m; ++j) {
        const double p = g.slopes[j];
        double best = p * f.abscissae[0] - f.values[0];
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const double cand = p * f.abscissae[i] - f.values[i];
            if (cand > best) {
                best = cand;
                arg = i;
            }
        }
        r.values[j] = best;
        r.argsup[j] = arg;
    }
    return r;
}

std::vector<std::size_t> lower_hull_indices(const SampledFunction& f) {
    std::vector<std::size_t> hull;
    hull.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        while (hull.size() >= 2 &&
               cross(f, hull[hull.size() - 2], hull[hull.size() - 1], i) <= wide_float(0))
            hull.pop_back();
        hull.push_back(i);
    }
    return hull;
}

ConjugateResult conjugate_fast(const SampledFunction& f, const SlopeGrid& g) {
    validate(f);
    validate(g);
    const auto hull = lower_hull_indices(f);
    const std::size_t h = hull.size(), m = g.size();

    std::vector<double> edge_slope(h - 1);
    for (std::size_t j = 0; j + 1 < h; ++j) {
        const std::size_t a = hull[j], b = hull[j + 1];
        edge_slope[j] = (f.values[b] - f.values[a]) / (f.abscissae[b] - f.abscissae[a]);
    }

    ConjugateResult r;
    r.slopes = g.slopes;
    r.values.resize(m);
    r.argsup.resize(m);
    r.finite.assign(m, true);

    std::size_t j = 0;  // current hull vertex
    for (std::size_t k = 0; k < m; ++k) {
        const double p = g.slopes[k];
        while (j + 1 < h && edge_slope[j] < p) ++j;
        const std::size_t i = hull[j];
        r.values[k] = p * f.abscissae[i] - f.values[i];
        r.argsup[k] = i;
    }
    return r;
}

SampledFunction biconjugate(const SampledFunction& f) {
    validate(f);
    const auto hull = lower_hull_indices(f);
    SampledFunction g;
    g.abscissae = f.abscissae;
    g.values.resize(f.size());
    for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
        const std::size_t l = hull[j], r = hull[j + 1];
        g.values[l] = f.values[l];
        for (std::size_t i = l + 1; i < r; ++i)
            g.values[i] = chord_value_round_up(f, l, r, i);
    }
    g.values.back() = f.values.back();
    return g;
}

std::pair<double, std::size_t> supporting_line(const SampledFunction& f, double p) {
    validate(f);
    double best = f.values[0] - p * f.abscissae[0];
    std::size_t arg = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double cand = f.values[i] - p * f.abscissae[i];
        if (cand < best) {
            best = cand;
            arg = i;
        }
    }
    return {best, arg};
}

EffectiveDomain effective_domain(const PolynomialLagrangian& f) {
    const int d = f.degree();
    const double lead = f.coeffs.empty() ? 0.0 : f.coeffs[d];
    if (d == 0) return {DomainKind::SinglePoint, 0.0};
    if (d == 1) return {DomainKind::SinglePoint, f.coeffs[1]};
    if (lead > 0.0 && d % 2 == 0) return {DomainKind::AllMomenta, 0.0};
    // The leading term drives L to -infinity in some direction, so the
    // supremum is +infinity for every momentum.
    return {DomainKind::Empty, 0.0};
}

HullSegments flat_regions(const SampledFunction& f) {
    validate(f);
    HullSegments out;
    out.breakpoints = lower_hull_indices(f);
    for (std::size_t j = 0; j + 1 < out.breakpoints.size(); ++j) {
        const std::size_t l = out.breakpoints[j], r = out.breakpoints[j + 1];
        bool gapped = false;
        for (std::size_t i = l + 1; i < r && !gapped; ++i)
            gapped = f.values[i] - chord_value_round_up(f, l, r, i) > kFlatGap;
        if (gapped) out.flat_regions.emplace_back(f.abscissae[l], f.abscissae[r]);
    }
    return out;
}

void apply_effective_domain(ConjugateResult& r, const EffectiveDomain& dom) {
    for (std::size_t j = 0; j < r.slopes.size(); ++j)
        if (!dom.contains(r.slopes[j])) r.finite[j] = false;
}

}  // namespace fenchel
