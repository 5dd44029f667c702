#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "fenchel/analytic.hpp"
#include "fenchel/branches.hpp"
#include "fenchel/conjugate.hpp"

namespace py = pybind11;
using namespace fenchel;

namespace {

py::object subgradient_to_py(const std::variant<double, ClosedInterval>& g) {
    if (std::holds_alternative<double>(g)) return py::float_(std::get<double>(g));
    const auto iv = std::get<ClosedInterval>(g);
    return py::make_tuple(iv.lo, iv.hi);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Single-valued Hamiltonians from non-convex Lagrangians via the "
              "Legendre-Fenchel transform";

    py::register_exception<convex_regime_error>(m, "ConvexRegimeError", PyExc_ValueError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double>(), py::arg("kappa") = 1.0)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def("convex_regime", &ModelParams::convex_regime);

    py::class_<PolynomialLagrangian>(m, "PolynomialLagrangian")
        .def(py::init([](std::vector<double> coeffs) {
                 return PolynomialLagrangian{std::move(coeffs)};
             }),
             py::arg("coeffs"))
        .def_readwrite("coeffs", &PolynomialLagrangian::coeffs)
        .def("__call__", &PolynomialLagrangian::operator())
        .def("degree", &PolynomialLagrangian::degree);

    py::class_<RealRoot>(m, "RealRoot")
        .def_readonly("value", &RealRoot::value)
        .def_readonly("multiplicity", &RealRoot::multiplicity)
        .def("__repr__", [](const RealRoot& r) {
            return "RealRoot(value=" + std::to_string(r.value) +
                   ", multiplicity=" + std::to_string(r.multiplicity) + ")";
        });

    py::class_<TangentPoint>(m, "TangentPoint")
        .def_readonly("momentum", &TangentPoint::momentum)
        .def_readonly("velocity", &TangentPoint::velocity)
        .def_readonly("intercept", &TangentPoint::intercept)
        .def_readonly("imaginary_residue", &TangentPoint::imaginary_residue);

    py::class_<VacuumState>(m, "VacuumState")
        .def_readonly("energy", &VacuumState::energy)
        .def_readonly("momenta", &VacuumState::momenta)
        .def_property_readonly("velocities", [](const VacuumState& s) -> py::object {
            if (std::holds_alternative<ClosedInterval>(s.velocities)) {
                const auto iv = std::get<ClosedInterval>(s.velocities);
                return py::make_tuple(iv.lo, iv.hi);
            }
            return py::cast(std::get<std::vector<double>>(s.velocities));
        })
        .def_property_readonly("velocity_is_interval", [](const VacuumState& s) {
            return std::holds_alternative<ClosedInterval>(s.velocities);
        });

    m.def("lagrangian_eval", &lagrangian_eval, py::arg("v"), py::arg("params") = ModelParams{});
    m.def("legendre_map", &legendre_map, py::arg("v"), py::arg("params") = ModelParams{});
    m.def("multivalued_hamiltonian", &multivalued_hamiltonian, py::arg("v"),
          py::arg("params") = ModelParams{});
    m.def("invert_legendre_map", &invert_legendre_map, py::arg("p"),
          py::arg("params") = ModelParams{});
    m.def("cusp_momenta", &cusp_momenta, py::arg("params") = ModelParams{});

    m.def("tangent_point_right", py::overload_cast<double>(&tangent_point_right), py::arg("p"));
    m.def("tangent_point_left", py::overload_cast<double>(&tangent_point_left), py::arg("p"));
    m.def("hamiltonian_closed_form", py::overload_cast<double>(&hamiltonian_closed_form),
          py::arg("p"));
    m.def("hamiltonian_closed_form",
          py::overload_cast<double, ModelParams>(&hamiltonian_closed_form), py::arg("p"),
          py::arg("params"));
    m.def("hamiltonian_subgradient",
          [](double p) { return subgradient_to_py(hamiltonian_subgradient(p)); }, py::arg("p"));
    m.def("revised_lagrangian", py::overload_cast<double>(&revised_lagrangian), py::arg("v"));
    m.def("momentum_of_velocity_revised",
          py::overload_cast<double>(&momentum_of_velocity_revised), py::arg("v"));
    m.def("vacuum_lft", py::overload_cast<>(&vacuum_lft));
    m.def("vacuum_cusp", py::overload_cast<>(&vacuum_cusp));

    py::class_<SampledFunction>(m, "SampledFunction")
        .def(py::init([](std::vector<double> xs, std::vector<double> ys) {
                 SampledFunction f{std::move(xs), std::move(ys)};
                 validate(f);
                 return f;
             }),
             py::arg("abscissae"), py::arg("values"))
        .def_readonly("abscissae", &SampledFunction::abscissae)
        .def_readonly("values", &SampledFunction::values)
        .def("__len__", &SampledFunction::size);

    py::class_<SlopeGrid>(m, "SlopeGrid")
        .def(py::init([](std::vector<double> ps) {
                 SlopeGrid g{std::move(ps)};
                 validate(g);
                 return g;
             }),
             py::arg("slopes"))
        .def_readonly("slopes", &SlopeGrid::slopes)
        .def("__len__", &SlopeGrid::size);

    py::class_<ConjugateResult>(m, "ConjugateResult")
        .def_readonly("slopes", &ConjugateResult::slopes)
        .def_readonly("values", &ConjugateResult::values)
        .def_readonly("argsup", &ConjugateResult::argsup)
        .def_readonly("finite", &ConjugateResult::finite);

    py::class_<HullSegments>(m, "HullSegments")
        .def_readonly("breakpoints", &HullSegments::breakpoints)
        .def_readonly("flat_regions", &HullSegments::flat_regions);

    py::enum_<DomainKind>(m, "DomainKind")
        .value("ALL_MOMENTA", DomainKind::AllMomenta)
        .value("SINGLE_POINT", DomainKind::SinglePoint)
        .value("EMPTY", DomainKind::Empty);

    py::class_<EffectiveDomain>(m, "EffectiveDomain")
        .def_readonly("kind", &EffectiveDomain::kind)
        .def_readonly("point", &EffectiveDomain::point)
        .def("contains", &EffectiveDomain::contains);

    m.def("conjugate_bruteforce", &conjugate_bruteforce, py::arg("f"), py::arg("grid"));
    m.def("conjugate_fast", &conjugate_fast, py::arg("f"), py::arg("grid"));
    m.def("biconjugate", &biconjugate, py::arg("f"));
    m.def("supporting_line", &supporting_line, py::arg("f"), py::arg("p"));
    m.def("effective_domain", &effective_domain, py::arg("poly"));
    m.def("flat_regions", &flat_regions, py::arg("f"));

    py::enum_<RootSelector>(m, "RootSelector")
        .value("LOWEST", RootSelector::Lowest)
        .value("MIDDLE", RootSelector::Middle)
        .value("HIGHEST", RootSelector::Highest);

    py::class_<Branch>(m, "Branch")
        .def_readonly("p_lo", &Branch::p_lo)
        .def_readonly("p_hi", &Branch::p_hi)
        .def_readonly("selector", &Branch::selector)
        .def_property_readonly("label", [](const Branch& b) { return std::string(b.label); })
        .def("contains", &Branch::contains);

    py::class_<BranchSet>(m, "BranchSet")
        .def_readonly("p1", &BranchSet::p1)
        .def_readonly("p2", &BranchSet::p2)
        .def_property_readonly("branches",
                               [](const BranchSet& s) {
                                   return std::vector<Branch>(s.branches.begin(),
                                                              s.branches.end());
                               })
        .def("velocity", &BranchSet::velocity, py::arg("selector"), py::arg("p"))
        .def("hamiltonian", &BranchSet::hamiltonian, py::arg("selector"), py::arg("p"))
        .def("defined", &BranchSet::defined, py::arg("selector"), py::arg("p"));

    py::class_<XiRemap>(m, "XiRemap")
        .def(py::init([](double p1, double p2) { return XiRemap{p1, p2}; }), py::arg("p1"),
             py::arg("p2"))
        .def_static("for_model", &XiRemap::for_model, py::arg("params"))
        .def_readonly("p1", &XiRemap::p1)
        .def_readonly("p2", &XiRemap::p2);

    m.def("enumerate_branches", &enumerate_branches, py::arg("params") = ModelParams{});
    m.def("swallow_tail_curve", &swallow_tail_curve, py::arg("v_grid"),
          py::arg("params") = ModelParams{});
    m.def("xi_remap", &xi_remap, py::arg("p"), py::arg("remap"));
    m.def("xi_multiplicity_audit", &xi_multiplicity_audit, py::arg("xi"),
          py::arg("params") = ModelParams{});
}
