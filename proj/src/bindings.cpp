#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "weber/actions.hpp"
#include "weber/delay.hpp"
#include "weber/dynamics.hpp"
#include "weber/error.hpp"
#include "weber/hamiltonian.hpp"
#include "weber/spectrum.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

weber::PeriodicLoop make_loop(const std::vector<double>& samples) { return weber::PeriodicLoop({samples}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weber hydrogen toolkit (C++ core)";

    static py::exception<weber::Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const weber::Error& e) {
            py::set_error(error, (std::string(weber::to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::enum_<weber::Pair>(m, "Pair")
        .value("ElectronProton", weber::Pair::ElectronProton)
        .value("ProtonProton", weber::Pair::ProtonProton);
    py::enum_<weber::Model>(m, "Model").value("Coulomb", weber::Model::Coulomb).value("Weber", weber::Model::Weber);

    py::class_<weber::ModelParams>(m, "ModelParams")
        .def(py::init([](double alpha, weber::Pair pair, weber::Model model) {
                 return weber::ModelParams{alpha, pair, model};
             }),
             "alpha"_a = 0.0, "pair"_a = weber::Pair::ElectronProton, "model"_a = weber::Model::Weber)
        .def_readwrite("alpha", &weber::ModelParams::alpha)
        .def_readwrite("pair", &weber::ModelParams::pair)
        .def_readwrite("model", &weber::ModelParams::model);

    py::class_<weber::PhaseState>(m, "PhaseState")
        .def(py::init([](double t, double r, double phi, double p_r, double p_phi) {
                 return weber::PhaseState{t, r, phi, p_r, p_phi};
             }),
             "t"_a = 0.0, "r"_a = 1.0, "phi"_a = 0.0, "p_r"_a = 0.0, "p_phi"_a = 0.0)
        .def_readwrite("t", &weber::PhaseState::t)
        .def_readwrite("r", &weber::PhaseState::r)
        .def_readwrite("phi", &weber::PhaseState::phi)
        .def_readwrite("p_r", &weber::PhaseState::p_r)
        .def_readwrite("p_phi", &weber::PhaseState::p_phi)
        .def("__repr__", [](const weber::PhaseState& s) {
            return "PhaseState(t=" + std::to_string(s.t) + ", r=" + std::to_string(s.r) +
                   ", phi=" + std::to_string(s.phi) + ", p_r=" + std::to_string(s.p_r) +
                   ", p_phi=" + std::to_string(s.p_phi) + ")";
        });

    m.def("eval_hamiltonian", &weber::eval_hamiltonian, "state"_a, "params"_a);
    m.def("metric_components", [](double r, const weber::ModelParams& p) {
        const auto g = weber::metric_components(r, p);
        return py::make_tuple(g.g_rr, g.g_phiphi);
    });
    m.def("critical_radius", &weber::critical_radius, "params"_a);
    m.def("radial_momentum", &weber::radial_momentum, "r"_a, "energy"_a, "ell"_a, "alpha"_a);
    m.def("flow_field", [](const weber::PhaseState& s, const weber::ModelParams& p) {
        const auto d = weber::flow_field(s, p);
        return py::make_tuple(d.r, d.phi, d.p_r, d.p_phi);
    });

    py::class_<weber::TurningPoints>(m, "TurningPoints")
        .def_readonly("r_min", &weber::TurningPoints::r_min)
        .def_readonly("r_max", &weber::TurningPoints::r_max);
    py::enum_<weber::ActionMethod>(m, "ActionMethod")
        .value("Quadrature", weber::ActionMethod::Quadrature)
        .value("ClosedForm", weber::ActionMethod::ClosedForm)
        .value("SecondOrder", weber::ActionMethod::SecondOrder);
    py::class_<weber::ActionResult>(m, "ActionResult")
        .def_readonly("value", &weber::ActionResult::value)
        .def_readonly("method", &weber::ActionResult::method)
        .def_readonly("est_error", &weber::ActionResult::est_error);

    m.def("turning_points", &weber::turning_points, "energy"_a, "ell"_a, "alpha"_a);
    m.def("radial_action_quadrature", &weber::radial_action_quadrature, "energy"_a, "ell"_a, "alpha"_a,
          "rel_tol"_a = weber::kDefaultActionTol);
    m.def("radial_action_closed_form", &weber::radial_action_closed_form, "energy"_a, "ell"_a, "alpha"_a);
    m.def("apsidal_angle", &weber::apsidal_angle, "energy"_a, "ell"_a, "alpha"_a,
          "rel_tol"_a = weber::kDefaultActionTol);

    py::class_<weber::QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init(&weber::quantum_numbers), "n"_a, "ell"_a)
        .def_readonly("n_r", &weber::QuantumNumbers::n_r)
        .def_readonly("ell", &weber::QuantumNumbers::ell)
        .def_property_readonly("n", &weber::QuantumNumbers::n);
    py::enum_<weber::LevelMethod>(m, "LevelMethod")
        .value("ExactRootSolve", weber::LevelMethod::ExactRootSolve)
        .value("SecondOrderWeber", weber::LevelMethod::SecondOrderWeber)
        .value("SommerfeldSecondOrder", weber::LevelMethod::SommerfeldSecondOrder)
        .value("Coulomb", weber::LevelMethod::Coulomb);
    py::class_<weber::EnergyLevel>(m, "EnergyLevel")
        .def_readonly("qn", &weber::EnergyLevel::qn)
        .def_readonly("energy", &weber::EnergyLevel::energy)
        .def_readonly("method", &weber::EnergyLevel::method)
        .def_readonly("residual", &weber::EnergyLevel::residual);

    m.def("level_second_order_weber", &weber::level_second_order_weber, "qn"_a, "alpha"_a);
    m.def("level_sommerfeld", &weber::level_sommerfeld, "qn"_a, "alpha"_a);
    m.def("level_coulomb", &weber::level_coulomb, "n"_a);
    m.def("weber_sommerfeld_split", &weber::weber_sommerfeld_split, "n"_a, "alpha"_a);
    m.def("level_exact", &weber::level_exact, "qn"_a, "alpha"_a, "tol"_a = weber::kDefaultSpectrumTol);
    m.def("transition_frequency", &weber::transition_frequency, "a"_a, "b"_a);
    m.def(
        "spectrum_table",
        [](int n_max, double alpha, double tol) {
            py::list rows;
            for (const auto& row : weber::spectrum_table(n_max, alpha, tol)) {
                py::dict d;
                d["n"] = row.qn.n();
                d["l"] = row.qn.ell;
                d["n_r"] = row.qn.n_r;
                d["E_coulomb"] = row.e_coulomb;
                d["E_weber_2nd"] = row.e_weber_2nd;
                d["E_sommerfeld_2nd"] = row.e_sommerfeld_2nd;
                d["E_exact"] = row.e_exact;
                d["residual"] = row.residual;
                d["weber_minus_sommerfeld"] = row.weber_minus_sommerfeld;
                d["error"] = row.error ? py::cast(*row.error) : py::none();
                rows.append(d);
            }
            return rows;
        },
        "n_max"_a, "alpha"_a, "tol"_a = weber::kDefaultSpectrumTol);

    py::enum_<weber::Scheme>(m, "Scheme")
        .value("ImplicitMidpoint", weber::Scheme::ImplicitMidpoint)
        .value("GaussLegendre4", weber::Scheme::GaussLegendre4);
    py::class_<weber::IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("step", &weber::IntegratorConfig::step)
        .def_readwrite("scheme", &weber::IntegratorConfig::scheme)
        .def_readwrite("newton_tol", &weber::IntegratorConfig::newton_tol)
        .def_readwrite("max_newton_iters", &weber::IntegratorConfig::max_newton_iters)
        .def_readwrite("record_stride", &weber::IntegratorConfig::record_stride);
    py::class_<weber::OrbitTrace>(m, "OrbitTrace")
        .def_readonly("states", &weber::OrbitTrace::states)
        .def_readonly("energy_drift", &weber::OrbitTrace::energy_drift)
        .def_property_readonly("apsides", [](const weber::OrbitTrace& t) {
            py::list out;
            for (const auto& a : t.apsides) {
                out.append(py::make_tuple(a.t, a.r, a.phi,
                                          a.kind == weber::ApsisKind::Periproton ? "periproton" : "apoproton"));
            }
            return out;
        });

    m.def("integrate", &weber::integrate, "initial"_a, "params"_a, "duration"_a,
          "config"_a = weber::IntegratorConfig{});
    m.def("measure_periproton_shift", [](const weber::OrbitTrace& t) {
        const auto s = weber::measure_periproton_shift(t);
        return py::make_tuple(s.mean, s.stddev);
    });
    m.def(
        "rosette_closure",
        [](double shift, double tol) -> py::object {
            const auto c = weber::rosette_closure(shift, tol);
            if (!c.periodic) return py::none();
            return py::make_tuple(c.p, c.q);
        },
        "shift"_a, "tol"_a, "Returns (p, q) for a periodic rosette, None when quasiperiodic.");

    m.def(
        "retarded_action", [](const std::vector<double>& s, double a) { return weber::retarded_action(make_loop(s), a); },
        "samples"_a, "a"_a);
    m.def(
        "taylor_coefficient_numeric",
        [](const std::vector<double>& s, int k, double h) { return weber::taylor_coefficient_numeric(make_loop(s), k, h); },
        "samples"_a, "k"_a, "h"_a = 1e-3);
    m.def(
        "taylor_coefficient_analytic",
        [](const std::vector<double>& s, int k) { return weber::taylor_coefficient_analytic(make_loop(s), k); },
        "samples"_a, "k"_a);
    m.def(
        "neumann_action", [](const std::vector<double>& s, double alpha) { return weber::neumann_action(make_loop(s), alpha); },
        "samples"_a, "alpha"_a);
    m.def(
        "truncation_error",
        [](const std::vector<double>& s, double alpha) { return weber::truncation_error(make_loop(s), alpha); },
        "samples"_a, "alpha"_a);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
