#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fenchel/analytic.hpp"
#include "fenchel/branches.hpp"
#include "fenchel/conjugate.hpp"
#include "fenchel/csv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;   // invalid arguments or malformed input
constexpr int kExitDomain = 3;  // unbounded conjugate / domain error
constexpr int kExitIo = 4;      // unwritable output

struct GridSpec {
    double lo;
    double hi;
    std::size_t points;

    std::vector<double> make() const {
        std::vector<double> xs(points);
        for (std::size_t i = 0; i < points; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(points - 1);
            xs[i] = lo + t * (hi - lo);
        }
        xs.front() = lo;
        xs.back() = hi;
        return xs;
    }
};

GridSpec parse_grid(const std::vector<double>& raw, const char* flag) {
    if (raw.size() != 3)
        throw CLI::ValidationError(std::string(flag) + " expects MIN,MAX,POINTS");
    if (!(raw[0] < raw[1]))
        throw CLI::ValidationError(std::string(flag) + ": MIN must be < MAX");
    if (!(raw[2] >= 2.0) || raw[2] != std::floor(raw[2]) || raw[2] > 5e7)
        throw CLI::ValidationError(std::string(flag) + ": POINTS must be an integer >= 2");
    return GridSpec{raw[0], raw[1], static_cast<std::size_t>(raw[2])};
}

// Writes through either a file or stdout; fails with exit code 4 on I/O
// trouble, checked after the payload is flushed.
class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return path_.empty() ? std::cout : file_; }

    void finish() {
        stream().flush();
        if (!stream().good()) throw std::runtime_error("failed writing output: " + path_);
    }

private:
    std::string path_;
    std::ofstream file_;
};

int cmd_hamiltonian(double kappa, const GridSpec& slopes, const std::string& out_path) {
    Output out(out_path);
    auto& os = out.stream();
    fenchel::csv_header(os, {"p", "H_lft", "H_ref_upper", "H_ref_lower"});
    const fenchel::ModelParams params{kappa};
    for (double p : slopes.make()) {
        const double h = (kappa == 1.0) ? fenchel::hamiltonian_closed_form(p)
                                        : fenchel::hamiltonian_closed_form(p, params);
        const double row[] = {p, h, std::abs(p) + 0.25, 0.25 - std::abs(p)};
        fenchel::csv_row(os, row);
    }
    out.finish();
    return kExitOk;
}

int cmd_lagrangian(double kappa, const GridSpec& grid, const std::string& out_path) {
    Output out(out_path);
    auto& os = out.stream();
    fenchel::csv_comment(os, "HPI Lagrangian column omitted: no closed form available;");
    fenchel::csv_comment(os, "see the vacuum subcommand for its literature constants.");
    fenchel::csv_header(os, {"v", "L_original", "L_lft"});
    const fenchel::ModelParams params{kappa};
    for (double v : grid.make()) {
        const double hull = (kappa == 1.0) ? fenchel::revised_lagrangian(v)
                                           : fenchel::revised_lagrangian(v, params);
        const double row[] = {v, fenchel::lagrangian_eval(v, params), hull};
        fenchel::csv_row(os, row);
    }
    out.finish();
    return kExitOk;
}

int cmd_branches(double kappa, const GridSpec& grid, const GridSpec& slopes, bool with_xi,
                 const std::string& out_path) {
    const fenchel::ModelParams params{kappa};
    const auto remap = fenchel::XiRemap::for_model(params);  // rejects kappa <= 0

    // Merge the cusp velocities into the grid so the cusp rows are exact.
    std::vector<double> vs = grid.make();
    const double lo = vs.front(), hi = vs.back();
    const double vc = std::sqrt(kappa / 3.0);
    for (double v : {-vc, vc})
        if (v > lo && v < hi) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    Output out(out_path);
    auto& os = out.stream();
    fenchel::csv_header(os, {"p", "H"});
    for (const auto& [p, h] : fenchel::swallow_tail_curve(vs, params)) {
        const double row[] = {p, h};
        fenchel::csv_row(os, row);
    }

    if (with_xi) {
        os << '\n';
        fenchel::csv_header(os, {"p", "xi_1", "xi_2", "xi_3", "multiplicity"});
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (double p : slopes.make()) {
            const auto xs = fenchel::xi_remap(p, remap);
            double row[] = {p, nan, nan, nan, static_cast<double>(xs.size())};
            for (std::size_t i = 0; i < xs.size() && i < 3; ++i) row[1 + i] = xs[i];
            fenchel::csv_row(os, row);
        }
    }
    out.finish();
    return kExitOk;
}

int cmd_vacuum() {
    const auto lft = fenchel::vacuum_lft();
    const auto cusp = fenchel::vacuum_cusp();
    const auto iv = std::get<fenchel::ClosedInterval>(lft.velocities);
    const auto cusp_v = std::get<std::vector<double>>(cusp.velocities);
    using fenchel::format_double;

    std::cout << "vacuum states of the quartic model L(v) = v^4/4 - v^2/2 (kappa = 1)\n";
    std::cout << "  legendre-fenchel (single-valued): H0 = " << format_double(lft.energy)
              << ", p0 = " << format_double(lft.momenta[0]) << ", v0 in ["
              << format_double(iv.lo) << ", " << format_double(iv.hi) << "]\n";
    std::cout << "  multi-valued cusp:                H0 = " << format_double(cusp.energy)
              << ", p0 = +-" << format_double(cusp.momenta[1]) << ", v0 = -+"
              << format_double(-cusp_v[1]) << "\n";
    std::cout << "  hamiltonian path integral:        H0 = 0.5, p0 = 0, v0 = 0"
              << " (literature values, not computed here)\n";
    return kExitOk;
}

int cmd_conjugate(const std::string& input_path, const std::vector<double>& poly_coeffs,
                  const GridSpec& grid, const GridSpec& slopes, bool emit_biconjugate,
                  bool use_oracle, const std::string& out_path) {
    fenchel::SampledFunction f;
    fenchel::EffectiveDomain domain{fenchel::DomainKind::AllMomenta, 0.0};
    bool analytic_input = false;

    if (!poly_coeffs.empty()) {
        analytic_input = true;
        const fenchel::PolynomialLagrangian poly{poly_coeffs};
        domain = fenchel::effective_domain(poly);
        if (domain.kind == fenchel::DomainKind::Empty) {
            std::cerr << "fenchel: conjugate of this polynomial is +infinity for every "
                         "momentum (unbounded Lagrangian)\n";
            return kExitDomain;
        }
        f.abscissae = grid.make();
        f.values.reserve(f.abscissae.size());
        for (double x : f.abscissae) f.values.push_back(poly(x));
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "fenchel: cannot open input file: " << input_path << "\n";
            return kExitUsage;
        }
        try {
            auto [xs, ys] = fenchel::parse_xy_csv(in);
            f.abscissae = std::move(xs);
            f.values = std::move(ys);
        } catch (const fenchel::CsvParseError& e) {
            std::cerr << "fenchel: " << input_path << ":" << e.line << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    try {
        fenchel::validate(f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fenchel: invalid input samples: " << e.what() << "\n";
        return kExitUsage;
    }

    Output out(out_path);
    auto& os = out.stream();
    if (emit_biconjugate) {
        const auto hull = fenchel::biconjugate(f);
        fenchel::csv_header(os, {"x", "hull"});
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const double row[] = {hull.abscissae[i], hull.values[i]};
            fenchel::csv_row(os, row);
        }
    } else {
        const fenchel::SlopeGrid g{slopes.make()};
        auto r = use_oracle ? fenchel::conjugate_bruteforce(f, g) : fenchel::conjugate_fast(f, g);
        if (analytic_input) fenchel::apply_effective_domain(r, domain);
        fenchel::csv_header(os, {"p", "conjugate", "finite", "argsup_x"});
        for (std::size_t j = 0; j < r.slopes.size(); ++j) {
            const double row[] = {r.slopes[j], r.values[j], r.finite[j] ? 1.0 : 0.0,
                                  f.abscissae[r.argsup[j]]};
            fenchel::csv_row(os, row);
        }
    }
    out.finish();
    return kExitOk;
}

int cmd_audit(double kappa) {
    using namespace fenchel;
    int failures = 0;
    auto check = [&failures](bool ok, const std::string& name, const std::string& detail) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    // Tangency of the closed-form supporting points.
    double worst_tangency = 0.0;
    for (int i = -1000; i <= 1000; ++i) {
        if (i == 0) continue;
        const double p = i * 0.01;
        const auto tp = (p > 0.0) ? tangent_point_right(p) : tangent_point_left(p);
        worst_tangency = std::max(worst_tangency,
                                  std::abs(tp.velocity * tp.velocity * tp.velocity -
                                           tp.velocity - p));
    }
    check(worst_tangency <= 1e-10, "tangency residual on p in [-10,10]",
          "max " + format_double(worst_tangency));

    // Imaginary residue of the complex cube-root evaluation.
    std::mt19937 rng(20140313u);
    const auto [p1u, p2u] = cusp_momenta(ModelParams{1.0});
    std::uniform_real_distribution<double> below(p1u - 20.0, p1u);
    double worst_residue = 0.0;
    for (int i = 0; i < 10000; ++i)
        worst_residue = std::max(worst_residue, tangent_point_left(below(rng)).imaginary_residue);
    check(worst_residue <= 1e-10, "imaginary residue below the left cusp",
          "max " + format_double(worst_residue));

    // Fenchel-Young inequality on closed forms.
    int fy_violations = 0;
    for (int j = -400; j <= 400; ++j) {
        const double p = j * 0.005;
        const double h = hamiltonian_closed_form(p);
        for (int i = -300; i <= 300; ++i) {
            const double v = i * 0.01;
            if (p * v - lagrangian_eval(v, ModelParams{1.0}) > h + 1e-9) ++fy_violations;
        }
    }
    check(fy_violations == 0, "Fenchel-Young inequality on a (v,p) grid",
          std::to_string(fy_violations) + " violations");

    // Evenness and continuity at the kink.
    double worst_even = 0.0;
    for (int j = 1; j <= 400; ++j) {
        const double p = j * 0.005;
        worst_even = std::max(worst_even, std::abs(hamiltonian_closed_form(p) -
                                                   hamiltonian_closed_form(-p)));
    }
    const bool seam = std::abs(hamiltonian_closed_form(1e-9) - 0.25) <= 1e-8 &&
                      std::abs(hamiltonian_closed_form(-1e-9) - 0.25) <= 1e-8 &&
                      hamiltonian_closed_form(0.0) == 0.25;
    check(worst_even <= 1e-12 && seam, "H even in p and continuous at 0",
          "max asymmetry " + format_double(worst_even));

    // Hull dominance of the revised Lagrangian.
    bool hull_ok = true;
    for (int i = -3000; i <= 3000; ++i) {
        const double v = i * 0.001;
        const double orig = lagrangian_eval(v, ModelParams{1.0});
        if (revised_lagrangian(v) > orig + 1e-12) hull_ok = false;
        if (std::abs(v) >= 1.0 && revised_lagrangian(v) != orig) hull_ok = false;
    }
    check(hull_ok, "revised Lagrangian is a convex minorant", "");

    // The branched remap certificate, at the requested kappa.
    const ModelParams params{kappa};
    const auto [p1, p2] = cusp_momenta(params);
    const auto remap = XiRemap::for_model(params);
    std::uniform_real_distribution<double> interior(p1 * 0.999, p2 * 0.999);
    bool remap_ok = true;
    for (int i = 0; i < 1000; ++i) {
        if (xi_remap(interior(rng), remap).size() != 3) remap_ok = false;
        if (xi_multiplicity_audit(interior(rng), params) != 3) remap_ok = false;
    }
    remap_ok = remap_ok && xi_remap(2.0 * p2, remap).size() == 1 &&
               xi_multiplicity_audit(2.0 * p2, params) == 1 &&
               xi_multiplicity_audit(p2, params) == 2;
    check(remap_ok, "branched momentum remap stays multi-valued inside the cusp band", "");

    std::cout << (failures == 0 ? "audit passed\n" : "audit FAILED\n");
    return failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-valued Hamiltonians from non-convex Lagrangians via the "
                 "Legendre-Fenchel transform"};
    app.require_subcommand(1);

    double kappa = 1.0;
    std::vector<double> grid_raw = {-3.0, 3.0, 4001.0};
    std::vector<double> slopes_raw = {-2.0, 2.0, 4001.0};
    std::string out_path;
    std::string input_path;
    std::vector<double> poly_coeffs;
    bool with_xi = false, emit_biconjugate = false, use_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool needs_grid, bool needs_slopes) {
        cmd->add_option("--kappa", kappa, "quadratic coefficient of the model Lagrangian");
        if (needs_grid)
            cmd->add_option("--grid", grid_raw, "velocity grid as MIN,MAX,POINTS")
                ->delimiter(',');
        if (needs_slopes)
            cmd->add_option("--slopes", slopes_raw, "momentum grid as MIN,MAX,POINTS")
                ->delimiter(',');
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    auto* ham = app.add_subcommand("hamiltonian",
                                   "emit p, H(p) and the straight-line reference guides");
    add_common(ham, false, true);

    auto* lag = app.add_subcommand("lagrangian",
                                   "emit v, the original Lagrangian and its convex hull");
    add_common(lag, true, false);

    auto* bra = app.add_subcommand("branches",
                                   "emit the parametric multi-valued (swallow-tail) curve");
    add_common(bra, true, true);
    bra->add_flag("--xi", with_xi, "append the branched momentum remap table");

    auto* vac = app.add_subcommand("vacuum", "report the vacuum states of the three methods");
    (void)vac;

    auto* con = app.add_subcommand("conjugate",
                                   "discrete Legendre-Fenchel transform of sampled data");
    con->add_option("input", input_path, "two-column (x,f) CSV file");
    con->add_option("--poly", poly_coeffs,
                    "conjugate a polynomial c0,c1,... sampled on --grid instead of a file")
        ->delimiter(',');
    add_common(con, true, true);
    con->add_flag("--biconjugate", emit_biconjugate, "emit the convex hull of the samples");
    con->add_flag("--oracle", use_oracle, "use the O(N*M) supremum scan");

    auto* aud = app.add_subcommand("audit", "run the built-in consistency audits");
    aud->add_option("--kappa", kappa, "model parameter for the remap audit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "fenchel: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(ham))
            return cmd_hamiltonian(kappa, parse_grid(slopes_raw, "--slopes"), out_path);
        if (app.got_subcommand(lag))
            return cmd_lagrangian(kappa, parse_grid(grid_raw, "--grid"), out_path);
        if (app.got_subcommand(bra))
            return cmd_branches(kappa, parse_grid(grid_raw, "--grid"),
                                parse_grid(slopes_raw, "--slopes"), with_xi, out_path);
        if (app.got_subcommand(vac)) return cmd_vacuum();
        if (app.got_subcommand(con)) {
            if (input_path.empty() && poly_coeffs.empty()) {
                std::cerr << "fenchel: conjugate needs an input CSV or --poly\n";
                return kExitUsage;
            }
            if (!input_path.empty() && !poly_coeffs.empty()) {
                std::cerr << "fenchel: pass either an input CSV or --poly, not both\n";
                return kExitUsage;
            }
            return cmd_conjugate(input_path, poly_coeffs, parse_grid(grid_raw, "--grid"),
                                 parse_grid(slopes_raw, "--slopes"), emit_biconjugate,
                                 use_oracle, out_path);
        }
        if (app.got_subcommand(aud)) return cmd_audit(kappa);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "fenchel: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fenchel::convex_regime_error& e) {
        std::cerr << "fenchel: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fenchel: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "fenchel: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
