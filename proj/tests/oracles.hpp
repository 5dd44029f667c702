#pragma once

// Test-side oracles, deliberately independent of the library's solvers:
// roots come from a sign-scan plus bisection, suprema from a dense scan.

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// All real roots of v^3 - kappa*v = p found by scanning [-span, span] for
// sign changes and bisecting each bracket.
inline std::vector<double> bisect_cubic_roots(double p, double kappa, double span = 64.0,
                                              int cells = 2'000'000) {
    auto fn = [&](double v) { return v * v * v - kappa * v - p; };
    std::vector<double> roots;
    double prev_x = -span, prev_f = fn(prev_x);
    for (int i = 1; i <= cells; ++i) {
        const double x = -span + 2.0 * span * i / cells;
        const double fx = fn(x);
        if (prev_f == 0.0) roots.push_back(prev_x);
        if (prev_f * fx < 0.0) {
            double lo = prev_x, hi = x;
            for (int j = 0; j < 100; ++j) {
                const double mid = 0.5 * (lo + hi);
                if (fn(lo) * fn(mid) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = fx;
    }
    if (prev_f == 0.0) roots.push_back(prev_x);
    return roots;
}

// sup over a dense velocity grid of p*v - L(v).
inline double sup_scan(const std::function<double(double)>& lagrangian, double p, double lo,
                       double hi, int cells = 400'000) {
    double best = -1e300;
    for (int i = 0; i <= cells; ++i) {
        const double v = lo + (hi - lo) * i / cells;
        best = std::max(best, p * v - lagrangian(v));
    }
    return best;
}

}  // namespace oracles
