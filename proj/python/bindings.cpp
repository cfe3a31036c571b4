#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "falsevac/errors.hpp"
#include "falsevac/euclidean.hpp"
#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"
#include "falsevac/solitons.hpp"
#include "falsevac/wavefunctional.hpp"

namespace py = pybind11;
using namespace falsevac;

namespace {

py::array_t<double> to_array(std::span<const double> values) {
    py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
    std::copy(values.begin(), values.end(), out.mutable_data());
    return out;
}

FieldConfig field(const Grid& grid, std::vector<double> values) { return FieldConfig(grid, std::move(values)); }

}  // namespace

PYBIND11_MODULE(_falsevac, m) {
    m.doc() = "False-vacuum decay toolkit: potentials, kinks, Euclidean actions, Gaussian wavefunctionals.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<SolverError>(m, "SolverError", error.ptr());

    py::class_<QuarticDoubleWell>(m, "QuarticDoubleWell")
        .def(py::init([](double lambda, double a, double tilt) { return QuarticDoubleWell{lambda, a, tilt}; }),
             py::arg("lam") = 2.0, py::arg("a") = 1.0, py::arg("tilt") = 0.0)
        .def_readwrite("lam", &QuarticDoubleWell::lambda)
        .def_readwrite("a", &QuarticDoubleWell::a)
        .def_readwrite("tilt", &QuarticDoubleWell::tilt);
    py::class_<DrivenSineGordon>(m, "DrivenSineGordon")
        .def(py::init([](double c_a, double c_b, double phi_c, double tilt) { return DrivenSineGordon{c_a, c_b, phi_c, tilt}; }),
             py::arg("c_a") = 1.0, py::arg("c_b") = 0.0, py::arg("phi_c") = 0.0, py::arg("tilt") = 0.0)
        .def_readwrite("c_a", &DrivenSineGordon::c_a)
        .def_readwrite("c_b", &DrivenSineGordon::c_b)
        .def_readwrite("phi_c", &DrivenSineGordon::phi_c)
        .def_readwrite("tilt", &DrivenSineGordon::tilt);
    py::class_<TaylorQuartic>(m, "TaylorQuartic")
        .def(py::init([](double phi0, double c0, double c1) { return TaylorQuartic{phi0, c0, c1}; }),
             py::arg("phi0") = 0.0, py::arg("c0") = 1.0, py::arg("c1") = 0.0)
        .def_readwrite("phi0", &TaylorQuartic::phi0)
        .def_readwrite("c0", &TaylorQuartic::c0)
        .def_readwrite("c1", &TaylorQuartic::c1);

    m.def("family_name", &family_name, py::arg("spec"));
    m.def("eval", &eval, py::arg("spec"), py::arg("phi"));
    m.def("deriv", &deriv, py::arg("spec"), py::arg("phi"), py::arg("order"));
    m.def("gap_to_stiffness", &gap_to_stiffness, py::arg("gap"));

    py::class_<VacuumPair>(m, "VacuumPair")
        .def_readonly("phi_false", &VacuumPair::phi_false)
        .def_readonly("phi_true", &VacuumPair::phi_true)
        .def_readonly("v_false", &VacuumPair::v_false)
        .def_readonly("v_true", &VacuumPair::v_true)
        .def_readonly("gap", &VacuumPair::gap);
    m.def("find_minima", [](const PotentialSpec& spec, double lo, double hi) { return find_minima(spec, {lo, hi}); },
          py::arg("spec"), py::arg("lo"), py::arg("hi"));

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, std::size_t>(), py::arg("x_min"), py::arg("x_max"), py::arg("n"))
        .def_property_readonly("x_min", &Grid::x_min)
        .def_property_readonly("x_max", &Grid::x_max)
        .def_property_readonly("size", &Grid::size)
        .def_property_readonly("spacing", &Grid::spacing)
        .def("nodes", [](const Grid& g) { return to_array(g.nodes()); });

    m.def("integrate", [](const Grid& g, std::vector<double> v) { return integrate(field(g, std::move(v))); },
          py::arg("grid"), py::arg("values"));
    m.def("wall_gradient_energy",
          [](double n, double l, const Grid& g) { return wall_gradient_energy(DeltaPair{n, l, g}); },
          py::arg("n_param"), py::arg("l_sep"), py::arg("grid"));
    m.def("wall_gradient_energy_exact", &wall_gradient_energy_exact, py::arg("n_param"), py::arg("l_sep"));

    py::class_<KinkSolution>(m, "KinkSolution")
        .def_property_readonly("profile", [](const KinkSolution& k) { return to_array(k.profile.values()); })
        .def_readonly("mass", &KinkSolution::mass)
        .def_readonly("charge", &KinkSolution::charge)
        .def_readonly("bound", &KinkSolution::bound)
        .def_readonly("bps_residual", &KinkSolution::bps_residual);
    m.def("solve_kink", &solve_kink, py::arg("spec"), py::arg("grid"));
    m.def("kink_mass",
          [](const PotentialSpec& spec, const Grid& g, std::vector<double> v) { return kink_mass(spec, field(g, std::move(v))); },
          py::arg("spec"), py::arg("grid"), py::arg("values"));
    m.def("topological_charge",
          [](const Grid& g, std::vector<double> v, double phi_vac) { return topological_charge(field(g, std::move(v)), phi_vac); },
          py::arg("grid"), py::arg("values"), py::arg("phi_vac"));
    m.def("bogomolnyi_bound", &bogomolnyi_bound, py::arg("spec"), py::arg("charge"));

    py::class_<ActionReport>(m, "ActionReport")
        .def_readonly("gradient_term", &ActionReport::gradient_term)
        .def_readonly("potential_term", &ActionReport::potential_term)
        .def_readonly("total", &ActionReport::total)
        .def_readonly("t_p", &ActionReport::t_p)
        .def_readonly("reduced", &ActionReport::reduced);
    m.def("energy_functional",
          [](const PotentialSpec& spec, const Grid& g, std::vector<double> v) { return energy_functional(spec, field(g, std::move(v))); },
          py::arg("spec"), py::arg("grid"), py::arg("values"));
    m.def("reduced_action",
          [](const PotentialSpec& spec, const Grid& g, std::vector<double> v, double t_p) {
              return reduced_action(spec, field(g, std::move(v)), t_p);
          },
          py::arg("spec"), py::arg("grid"), py::arg("values"), py::arg("t_p"));
    m.def("euclidean_action_2d",
          [](const PotentialSpec& spec, const Grid& tau, const Grid& x, py::array_t<double, py::array::c_style | py::array::forcecast> values) {
              if (values.ndim() != 2) throw PreconditionError("values", "expected a 2-D array (tau, x)");
              std::vector<double> flat(values.data(), values.data() + values.size());
              return euclidean_action_2d(spec, SpacetimeConfig(tau, x, std::move(flat)));
          },
          py::arg("spec"), py::arg("tau_grid"), py::arg("x_grid"), py::arg("values"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("lagrangian_value", &BoundReport::lagrangian_value)
        .def_readonly("q_term", &BoundReport::q_term)
        .def_readonly("quadratic_term", &BoundReport::quadratic_term)
        .def_readonly("satisfied", &BoundReport::satisfied)
        .def_readonly("phi_c", &BoundReport::phi_c)
        .def_readonly("gap", &BoundReport::gap);
    m.def("lagrangian_bound",
          [](const PotentialSpec& spec, const Grid& g, std::vector<double> v, double lo, double hi, double q_abs) {
              return lagrangian_bound(spec, field(g, std::move(v)), {lo, hi}, q_abs);
          },
          py::arg("spec"), py::arg("grid"), py::arg("values"), py::arg("lo"), py::arg("hi"), py::arg("q_abs") = 0.0);

    py::class_<GaussianWavefunctional>(m, "GaussianWavefunctional")
        .def_property_readonly("center", [](const GaussianWavefunctional& p) { return to_array(p.center().values()); })
        .def_property_readonly("stiffness", [](const GaussianWavefunctional& p) { return to_array(p.stiffness()); })
        .def_property_readonly("log_norm", &GaussianWavefunctional::log_norm);
    m.def("make_functional",
          [](const Grid& g, std::vector<double> center, std::vector<double> stiffness) {
              return make_functional(field(g, std::move(center)), std::move(stiffness));
          },
          py::arg("grid"), py::arg("center"), py::arg("stiffness"));
    m.def("make_functional",
          [](const Grid& g, std::vector<double> center, double stiffness) { return make_functional(field(g, std::move(center)), stiffness); },
          py::arg("grid"), py::arg("center"), py::arg("stiffness"));
    m.def("evaluate_log",
          [](const GaussianWavefunctional& psi, std::vector<double> v) { return evaluate_log(psi, field(psi.center().grid(), std::move(v))); },
          py::arg("psi"), py::arg("values"));
    m.def("log_overlap", &log_overlap, py::arg("psi_i"), py::arg("psi_f"));
    m.def("overlap", &overlap, py::arg("psi_i"), py::arg("psi_f"));
    m.def("norm_check", &norm_check, py::arg("psi"));

    py::class_<VacuumStates>(m, "VacuumStates")
        .def_readonly("initial", &VacuumStates::initial)
        .def_readonly("final", &VacuumStates::final)
        .def_readonly("vacua", &VacuumStates::vacua)
        .def_readonly("alpha", &VacuumStates::alpha);
    m.def("vacuum_states",
          [](const PotentialSpec& spec, const Grid& g, double lo, double hi) { return vacuum_states(spec, g, {lo, hi}); },
          py::arg("spec"), py::arg("grid"), py::arg("lo") = -1.0, py::arg("hi") = 7.0);
}
