#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xrisk/compensation.hpp"
#include "xrisk/errors.hpp"
#include "xrisk/growth.hpp"
#include "xrisk/hazard.hpp"
#include "xrisk/indifference.hpp"
#include "xrisk/tables.hpp"
#include "xrisk/taxonomy.hpp"
#include "xrisk/welfare.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

xrisk::ScenarioSpec make_spec(double c0, double g_baseline, double g_ai, double rho, double theta) {
    xrisk::ScenarioSpec s;
    s.c0 = c0;
    s.g_baseline = g_baseline;
    s.g_ai = g_ai;
    s.prefs.rho = rho;
    s.prefs.theta_rra = theta;
    return s;
}

py::object outcome_to_py(const xrisk::SolveOutcome& out) {
    if (out.has_value()) return py::float_(out.x);
    return py::str(xrisk::to_string(out.kind));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Welfare and indifference calculus for AI existential risk";

    py::register_exception<xrisk::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<xrisk::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<xrisk::ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<xrisk::ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init(&make_spec), "c0"_a = 1.0, "g_baseline"_a = 0.0175, "g_ai"_a = 0.05, "rho"_a = 0.03,
             "theta"_a = 1.0)
        .def_readwrite("c0", &xrisk::ScenarioSpec::c0)
        .def_readwrite("g_baseline", &xrisk::ScenarioSpec::g_baseline)
        .def_readwrite("g_ai", &xrisk::ScenarioSpec::g_ai)
        .def_property(
            "rho", [](const xrisk::ScenarioSpec& s) { return s.prefs.rho; },
            [](xrisk::ScenarioSpec& s, double v) { s.prefs.rho = v; })
        .def_property(
            "theta", [](const xrisk::ScenarioSpec& s) { return s.prefs.theta_rra; },
            [](xrisk::ScenarioSpec& s, double v) { s.prefs.theta_rra = v; });

    m.def(
        "p_doom", [](double p1, double p2, double p3, double p4) {
            return xrisk::p_doom(xrisk::TaxonomyProbs(p1, p2, p3, p4, 1.0));
        },
        "p1"_a, "p2"_a, "p3"_a, "p4"_a);
    m.def(
        "leaf_distribution", [](double p1, double p2, double p3, double p4) {
            const auto l = xrisk::leaf_distribution(xrisk::TaxonomyProbs(p1, p2, p3, p4, 1.0));
            py::dict d;
            d["no_tai"] = l.no_tai;
            d["tai_no_takeover"] = l.tai_no_takeover;
            d["cornucopia"] = l.cornucopia;
            d["doom_immediate"] = l.doom_immediate;
            d["doom_delayed"] = l.doom_delayed;
            return d;
        },
        "p1"_a, "p2"_a, "p3"_a, "p4"_a);

    m.def("welfare_no_takeover", [](const xrisk::ScenarioSpec& s) { return xrisk::welfare_no_takeover(s).value; });
    m.def("welfare_cornucopia", [](const xrisk::ScenarioSpec& s) { return xrisk::welfare_cornucopia(s).value; });
    m.def("welfare_truncated", [](const xrisk::ScenarioSpec& s, double T) { return xrisk::welfare_truncated(s, T).value; },
          "spec"_a, "T"_a);
    m.def("welfare_mounting",
          [](const xrisk::ScenarioSpec& s, double eps) { return xrisk::welfare_mounting(s, eps).value; }, "spec"_a,
          "epsilon"_a);

    m.def("solve_extinction_time", [](const xrisk::ScenarioSpec& s) { return outcome_to_py(xrisk::solve_extinction_time(s)); });
    m.def("solve_p3_immediate", [](const xrisk::ScenarioSpec& s) { return outcome_to_py(xrisk::solve_p3_immediate(s)); });
    m.def("solve_p3_delayed",
          [](const xrisk::ScenarioSpec& s, double p4, double T) { return outcome_to_py(xrisk::solve_p3_delayed(s, p4, T)); },
          "spec"_a, "p4"_a, "T"_a);
    m.def("solve_p4_delayed",
          [](const xrisk::ScenarioSpec& s, double p3, double T) { return outcome_to_py(xrisk::solve_p4_delayed(s, p3, T)); },
          "spec"_a, "p3"_a, "T"_a);
    m.def("solve_T_delayed",
          [](const xrisk::ScenarioSpec& s, double p3, double p4) { return outcome_to_py(xrisk::solve_T_delayed(s, p3, p4)); },
          "spec"_a, "p3"_a, "p4"_a);
    m.def("solve_epsilon_mounting",
          [](const xrisk::ScenarioSpec& s) { return outcome_to_py(xrisk::solve_epsilon_mounting(s)); });

    m.def(
        "equivalent_variation",
        [](const xrisk::ScenarioSpec& s, const std::string& panel, double p3, double p4, double T, double epsilon) {
            xrisk::EvPanel p;
            if (panel == "A") p = xrisk::PanelA{T};
            else if (panel == "B") p = xrisk::PanelB{p3};
            else if (panel == "C") p = xrisk::PanelC{p3, p4, T};
            else if (panel == "D") p = xrisk::PanelD{epsilon};
            else throw xrisk::DomainError("panel must be A, B, C or D");
            const auto ev = xrisk::ev_panel(s, p);
            py::dict d;
            d["ev"] = ev.ev;
            d["log_ev"] = ev.log_ev;
            d["wtp_fraction"] = ev.wtp_fraction;
            return d;
        },
        "spec"_a, "panel"_a, "p3"_a = 0.0, "p4"_a = 0.0, "T"_a = 0.0, "epsilon"_a = 0.0);

    m.def(
        "expected_lifespan_mounting",
        [](double epsilon, double c0, double growth) {
            return xrisk::expected_lifespan(xrisk::MountingLogHazard{epsilon, c0, growth});
        },
        "epsilon"_a, "c0"_a, "growth"_a);

    m.def(
        "calibrate_c0", [](double target, double g_ai, double rho, double g_baseline) {
            xrisk::Anchor a;
            a.target = target;
            a.g_ai = g_ai;
            a.rho = rho;
            return xrisk::calibrate_c0(a, g_baseline);
        },
        "target"_a = 0.055282, "g_ai"_a = 0.05, "rho"_a = 0.05, "g_baseline"_a = 0.0175);

    m.def(
        "emit_table",
        [](const std::string& id, const std::string& config_text) {
            const auto table = xrisk::parse_table_id(id);
            if (!table) throw xrisk::ConfigError("unknown table '" + id + "'");
            return xrisk::emit_table(*table, xrisk::parse_config(config_text));
        },
        "table_id"_a, "config"_a = "");

    m.def(
        "simulate_growth",
        [](bool full_automation, double saving_rate, double delta, double tech_growth, double horizon, double dt) {
            xrisk::SimulationSettings s;
            s.saving_rate = saving_rate;
            s.delta = delta;
            s.tech_growth = tech_growth;
            s.horizon = horizon;
            s.dt = dt;
            const auto tr = xrisk::simulate(xrisk::ProductionParams{},
                                            full_automation ? xrisk::Regime::full_automation
                                                            : xrisk::Regime::bottlenecked,
                                            s);
            py::dict d;
            d["t"] = tr.times;
            d["K"] = tr.K;
            d["Y"] = tr.Y;
            d["C"] = tr.C;
            d["growth_rate"] = xrisk::asymptotic_growth_rate(tr);
            return d;
        },
        "full_automation"_a = true, "saving_rate"_a = 0.3, "delta"_a = 0.05, "tech_growth"_a = 0.0,
        "horizon"_a = 200.0, "dt"_a = 0.05);
}
