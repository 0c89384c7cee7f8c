// Command-line front end: tables, single cells, lifespans, growth runs.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "xrisk/compensation.hpp"
#include "xrisk/config.hpp"
#include "xrisk/errors.hpp"
#include "xrisk/growth.hpp"
#include "xrisk/hazard.hpp"
#include "xrisk/indifference.hpp"
#include "xrisk/tables.hpp"
#include "xrisk/taxonomy.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;

struct Cli {
    std::string config_path;
    std::map<std::string, std::string> settings;  // key -> raw flag value
    double g_ai = 0.05;
    double rho = 0.03;
    double theta = 1.0;
    std::string table;
    std::string solve_table = "t1";
    std::string panel = "A";
    std::string hazard = "mounting";
    double rate = 0.0;
    double t_ext = 0.0;
    std::string regime = "full";
    double horizon = 200.0;
    double dt = 0.05;
    double K0 = 1.0;
    std::string anchor_table = "t2";
    xrisk::Anchor anchor;
};

xrisk::RunConfig resolve_config(const Cli& cli) {
    xrisk::RunConfig cfg = cli.config_path.empty() ? xrisk::RunConfig{} : xrisk::load_config(cli.config_path);
    for (const auto& key : xrisk::config_keys()) {
        if (auto it = cli.settings.find(key); it != cli.settings.end()) xrisk::apply_setting(cfg, key, it->second);
    }
    return cfg;
}

double resolve_c0(const xrisk::RunConfig& cfg) {
    return cfg.c0 ? *cfg.c0 : xrisk::calibrate_c0(xrisk::Anchor{}, cfg.g_baseline);
}

xrisk::ScenarioSpec scenario(const Cli& cli, const xrisk::RunConfig& cfg) {
    xrisk::ScenarioSpec s;
    s.c0 = resolve_c0(cfg);
    s.g_baseline = cfg.g_baseline;
    s.g_ai = cli.g_ai;
    s.prefs.rho = cli.rho;
    s.prefs.theta_rra = cli.theta;
    return s;
}

xrisk::SolverOptions solver_options(const xrisk::RunConfig& cfg) {
    xrisk::SolverOptions o;
    o.root.rel_tol = cfg.root_tol;
    o.quadrature.abs_tol = cfg.quad_tol;
    o.quadrature.rel_tol = cfg.quad_tol;
    return o;
}

double required(const std::optional<double>& v, const char* key) {
    if (!v) throw xrisk::ConfigError(std::string("missing required setting --") + key);
    return *v;
}

int run_pdoom(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    const xrisk::TaxonomyProbs probs(required(cfg.p1, "p1"), required(cfg.p2, "p2"), required(cfg.p3, "p3"),
                                     required(cfg.p4, "p4"), cfg.horizon_years);
    const auto leaves = xrisk::leaf_distribution(probs);
    std::printf("quantity,probability\n");
    std::printf("no_tai,%.12g\n", leaves.no_tai);
    std::printf("tai_no_takeover,%.12g\n", leaves.tai_no_takeover);
    std::printf("cornucopia,%.12g\n", leaves.cornucopia);
    std::printf("doom_immediate,%.12g\n", leaves.doom_immediate);
    std::printf("doom_delayed,%.12g\n", leaves.doom_delayed);
    std::printf("p_doom,%.12g\n", xrisk::p_doom(probs));
    return 0;
}

int run_table(const Cli& cli) {
    const auto id = xrisk::parse_table_id(cli.table);
    if (!id) throw xrisk::ConfigError("unknown table '" + cli.table + "'");
    std::cout << xrisk::emit_table(*id, resolve_config(cli));
    return 0;
}

int run_solve(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    const auto id = xrisk::parse_table_id(cli.solve_table);
    if (!id) throw xrisk::ConfigError("unknown table '" + cli.solve_table + "'");
    const auto s = scenario(cli, cfg);
    const auto opts = solver_options(cfg);
    const xrisk::TableSpec spec = xrisk::table_spec_from(*id, cfg);
    xrisk::SolveOutcome out;
    switch (*id) {
        case xrisk::TableId::t1: out = xrisk::solve_extinction_time(s, opts); break;
        case xrisk::TableId::t2: out = xrisk::solve_p3_immediate(s, opts); break;
        case xrisk::TableId::t3a: out = xrisk::solve_p3_delayed(s, spec.p4, spec.T, opts); break;
        case xrisk::TableId::t3b: out = xrisk::solve_p4_delayed(s, spec.p3, spec.T, opts); break;
        case xrisk::TableId::t3c: out = xrisk::solve_T_delayed(s, spec.p3, spec.p4, opts); break;
        case xrisk::TableId::t4: out = xrisk::solve_epsilon_mounting(s, opts); break;
        default: throw xrisk::ConfigError("solve takes t1, t2, t3a, t3b, t3c or t4");
    }
    std::printf("outcome,value,iterations,residual\n%s,%s,%d,%.3e\n", xrisk::to_string(out.kind).c_str(),
                out.has_value() ? xrisk::format_number(out.x).c_str() : "", out.iterations, out.residual);
    return 0;
}

int run_ev(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    const auto s = scenario(cli, cfg);
    const auto opts = solver_options(cfg);
    xrisk::EvPanel panel;
    if (cli.panel == "A") {
        panel = xrisk::PanelA{cfg.T.value_or(100.0)};
    } else if (cli.panel == "B") {
        panel = xrisk::PanelB{cfg.p3.value_or(0.1)};
    } else if (cli.panel == "C") {
        panel = xrisk::PanelC{cfg.p3.value_or(0.1), cfg.p4.value_or(0.1), cfg.T.value_or(50.0)};
    } else if (cli.panel == "D") {
        double eps = 0.0;
        if (cfg.epsilon) {
            eps = *cfg.epsilon;
        } else {
            const auto solved = xrisk::solve_epsilon_mounting(s, opts);
            if (!solved.has_value()) {
                std::printf("outcome\n%s\n", xrisk::to_string(solved.kind).c_str());
                return 0;
            }
            eps = solved.x;
        }
        panel = xrisk::PanelD{eps};
    } else {
        throw xrisk::ConfigError("panel must be A, B, C or D");
    }
    const auto ev = xrisk::ev_panel(s, panel, opts.quadrature);
    std::printf("ev,log_ev,wtp_fraction,cornucopia_welfare,risky_welfare\n%s,%.10g,%s,%.10g,%.10g\n",
                xrisk::format_from_log(ev.log_ev).c_str(), ev.log_ev, xrisk::format_number(ev.wtp_fraction).c_str(),
                ev.cornucopia_welfare, ev.risky_welfare);
    return 0;
}

int run_et(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    xrisk::HazardModel model;
    if (cli.hazard == "zero") {
        model = xrisk::ZeroHazard{};
    } else if (cli.hazard == "constant") {
        model = xrisk::ConstantHazard{cli.rate};
    } else if (cli.hazard == "oneoff") {
        model = xrisk::OneOffHazard{cli.t_ext};
    } else if (cli.hazard == "mounting") {
        model = xrisk::MountingLogHazard{required(cfg.epsilon, "epsilon"), resolve_c0(cfg), cli.g_ai};
    } else {
        throw xrisk::ConfigError("hazard must be zero, constant, oneoff or mounting");
    }
    xrisk::validate(model);
    std::printf("expected_lifespan\n%s\n", xrisk::format_number(xrisk::expected_lifespan(model)).c_str());
    return 0;
}

int run_growth(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    xrisk::Regime regime;
    if (cli.regime == "full") regime = xrisk::Regime::full_automation;
    else if (cli.regime == "bottleneck") regime = xrisk::Regime::bottlenecked;
    else throw xrisk::ConfigError("regime must be full or bottleneck");
    xrisk::SimulationSettings settings;
    settings.K0 = cli.K0;
    settings.saving_rate = cfg.saving_rate;
    settings.delta = cfg.delta;
    settings.tech_growth = cfg.tech_growth;
    settings.horizon = cli.horizon;
    settings.dt = cli.dt;
    const auto tr = xrisk::simulate(xrisk::ProductionParams{}, regime, settings);
    std::printf("t,K,Y,C\n");
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        std::printf("%.10g,%.10g,%.10g,%.10g\n", tr.times[i], tr.K[i], tr.Y[i], tr.C[i]);
    return 0;
}

int run_calibrate(const Cli& cli) {
    const auto cfg = resolve_config(cli);
    const auto id = xrisk::parse_table_id(cli.anchor_table);
    if (!id) throw xrisk::ConfigError("unknown table '" + cli.anchor_table + "'");
    xrisk::Anchor anchor = cli.anchor;
    anchor.table = *id;
    const double c0 = xrisk::calibrate_c0(anchor, cfg.g_baseline);
    std::printf("c0,log_c0\n%.10g,%.10g\n", c0, std::log(c0));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Welfare and indifference calculus for AI existential risk"};
    app.require_subcommand(1);
    app.fallthrough();
    Cli cli;
    app.add_option("--config", cli.config_path, "key=value settings file")->check(CLI::ExistingFile);
    for (const auto& key : xrisk::config_keys()) {
        app.add_option_function<std::string>(
            "--" + key, [&cli, key](const std::string& v) { cli.settings[key] = v; }, "override config key " + key);
    }

    auto* pdoom = app.add_subcommand("pdoom", "p(doom) and leaf probabilities from p1..p4");
    auto* table = app.add_subcommand("table", "emit one of t1 t2 t3a t3b t3c t4 t5a t5b t5c t5d");
    table->add_option("id", cli.table, "table id")->required();

    auto* solve = app.add_subcommand("solve", "solve one indifference cell");
    auto* ev = app.add_subcommand("ev", "equivalent variation for one cell");
    auto* calibrate = app.add_subcommand("calibrate-c0", "recover c0 from a published cell");
    for (auto* sub : {solve, ev}) {
        sub->add_option("--g_ai", cli.g_ai, "AI-era growth rate");
        sub->add_option("--rho", cli.rho, "rate of time preference");
        sub->add_option("--theta", cli.theta, "relative risk aversion");
    }
    solve->add_option("--table", cli.solve_table, "which indifference condition (t1..t4)");
    ev->add_option("--panel", cli.panel, "A (T), B (p3), C (p3,p4,T) or D (epsilon)");
    calibrate->add_option("--anchor", cli.anchor_table, "table of the anchor cell");
    calibrate->add_option("--g_ai", cli.anchor.g_ai, "anchor growth rate");
    calibrate->add_option("--rho", cli.anchor.rho, "anchor rate of time preference");
    calibrate->add_option("--theta", cli.anchor.theta, "anchor risk aversion");
    calibrate->add_option("--target", cli.anchor.target, "published value of the anchor cell");

    auto* et = app.add_subcommand("et", "expected lifespan after takeover");
    et->add_option("--hazard", cli.hazard, "zero, constant, oneoff or mounting");
    et->add_option("--rate", cli.rate, "constant hazard rate");
    et->add_option("--t_ext", cli.t_ext, "one-off extinction date");
    et->add_option("--g_ai", cli.g_ai, "growth rate of the mounting hazard path");

    auto* growth = app.add_subcommand("simulate-growth", "trajectory CSV of the production model");
    growth->add_option("--regime", cli.regime, "full or bottleneck");
    growth->add_option("--horizon", cli.horizon, "years");
    growth->add_option("--dt", cli.dt, "step size, years");
    growth->add_option("--K0", cli.K0, "initial capital");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (pdoom->parsed()) return run_pdoom(cli);
        if (table->parsed()) return run_table(cli);
        if (solve->parsed()) return run_solve(cli);
        if (ev->parsed()) return run_ev(cli);
        if (et->parsed()) return run_et(cli);
        if (growth->parsed()) return run_growth(cli);
        if (calibrate->parsed()) return run_calibrate(cli);
    } catch (const xrisk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const xrisk::ConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const xrisk::DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
