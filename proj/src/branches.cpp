#include "fenchel/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fenchel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Roots expanded by multiplicity, ascending (size 1 or 3 for kappa > 0).
std::vector<double> expanded_roots(double p, ModelParams params) {
    std::vector<double> out;
    for (const RealRoot& r : invert_legendre_map(p, params))
        out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    return out;
}

}  // namespace

std::string_view to_string(RootSelector s) {
    switch (s) {
        case RootSelector::Lowest: return "lowest";
        case RootSelector::Middle: return "middle";
        case RootSelector::Highest: return "highest";
    }
    return "?";
}

double BranchSet::velocity(RootSelector s, double p) const {
    const auto roots = expanded_roots(p, params);
    switch (s) {
        case RootSelector::Lowest: return roots.front();
        case RootSelector::Highest: return roots.back();
        case RootSelector::Middle:
            if (roots.size() < 3)
                throw std::domain_error("BranchSet::velocity: middle root undefined here");
            return roots[1];
    }
    throw std::domain_error("BranchSet::velocity: bad selector");
}

double BranchSet::hamiltonian(RootSelector s, double p) const {
    return multivalued_hamiltonian(velocity(s, p), params);
}

bool BranchSet::defined(RootSelector s, double p) const {
    for (const Branch& b : branches)
        if (b.selector == s) return b.contains(p);
    return false;
}

BranchSet enumerate_branches(ModelParams params) {
    const auto [p1, p2] = cusp_momenta(params);  // throws in the convex regime
    BranchSet set;
    set.params = params;
    set.p1 = p1;
    set.p2 = p2;
    set.branches = {Branch{-kInf, p2, RootSelector::Lowest, "phi3"},
                    Branch{p1, p2, RootSelector::Middle, "phi2"},
                    Branch{p1, kInf, RootSelector::Highest, "phi1"}};
    return set;
}

std::vector<std::pair<double, double>> swallow_tail_curve(const std::vector<double>& v_grid,
                                                          ModelParams params) {
    for (std::size_t i = 0; i < v_grid.size(); ++i) {
        if (!std::isfinite(v_grid[i]))
            throw std::invalid_argument("swallow_tail_curve: grid must be finite");
        if (i > 0 && !(v_grid[i - 1] < v_grid[i]))
            throw std::invalid_argument("swallow_tail_curve: grid must be strictly increasing");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(v_grid.size());
    for (double v : v_grid)
        out.emplace_back(legendre_map(v, params), multivalued_hamiltonian(v, params));
    return out;
}

XiRemap XiRemap::for_model(ModelParams params) {
    const auto [p1, p2] = cusp_momenta(params);
    return XiRemap{p1, p2};
}

std::vector<double> xi_remap(double p, const XiRemap& remap) {
    if (!std::isfinite(p)) throw std::invalid_argument("xi_remap: p must be finite");
    std::vector<double> xs;
    if (p <= remap.p2) xs.push_back(p - remap.p2 + remap.p1);
    if (p >= remap.p1 && p <= remap.p2) xs.push_back(-p + remap.p2 + remap.p1);
    if (p >= remap.p1) xs.push_back(p + remap.p2 - remap.p1);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

int xi_multiplicity_audit(double xi, ModelParams params) {
    if (params.kappa <= 0.0)
        throw convex_regime_error("xi_multiplicity_audit: requires kappa > 0");
    return static_cast<int>(invert_legendre_map(-xi, params).size());
}

}  // namespace fenchel
