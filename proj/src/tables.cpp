#include "xrisk/tables.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "xrisk/compensation.hpp"
#include "xrisk/errors.hpp"
#include "xrisk/roots.hpp"

namespace xrisk {
namespace {

struct TableName {
    TableId id;
    const char* name;
};

constexpr TableName kNames[] = {
    {TableId::t1, "t1"},   {TableId::t2, "t2"},   {TableId::t3a, "t3a"}, {TableId::t3b, "t3b"},
    {TableId::t3c, "t3c"}, {TableId::t4, "t4"},   {TableId::t5a, "t5a"}, {TableId::t5b, "t5b"},
    {TableId::t5c, "t5c"}, {TableId::t5d, "t5d"},
};

const char* caption(TableId id) {
    switch (id) {
        case TableId::t1: return "Extinction time T at indifference";
        case TableId::t2: return "Immediate misalignment probability p3 at indifference";
        case TableId::t3a: return "p3 at indifference with delayed doom";
        case TableId::t3b: return "p4 at indifference with delayed doom";
        case TableId::t3c: return "Non-corrigibility date T at indifference";
        case TableId::t4: return "Hazard elasticity epsilon at indifference";
        case TableId::t5a: return "EV, extinction at T";
        case TableId::t5b: return "EV, immediate doom with p3";
        case TableId::t5c: return "EV, delayed-doom lottery";
        case TableId::t5d: return "EV, mounting log hazard";
    }
    return "";
}

Cell number_cell(double value) {
    Cell c;
    c.value = value;
    c.log_value = value > 0.0 ? std::log(value) : -std::numeric_limits<double>::infinity();
    return c;
}

Cell ev_cell(const EvResult& ev) {
    Cell c;
    c.value = ev.ev;
    c.log_value = ev.log_ev;
    return c;
}

Cell outcome_cell(const SolveOutcome& out) {
    if (out.has_value()) return number_cell(out.x);
    Cell c;
    c.kind = Cell::Kind::sentinel;
    c.outcome = out.kind;
    c.value = std::numeric_limits<double>::quiet_NaN();
    return c;
}

std::string sanitize(std::string text) {
    for (char& ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '|') ch = ' ';
    }
    return text;
}

std::string grid_label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

ScenarioSpec cell_scenario(double theta, double g_ai, double rho, const CellParams& params) {
    ScenarioSpec s;
    s.c0 = params.c0;
    s.g_baseline = params.g_baseline;
    s.g_ai = g_ai;
    s.prefs.rho = rho;
    s.prefs.theta_rra = theta;
    return s;
}

}  // namespace

std::string to_string(TableId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.name;
    return "?";
}

std::optional<TableId> parse_table_id(std::string_view text) {
    for (const auto& n : kNames)
        if (text == n.name) return n.id;
    return std::nullopt;
}

const std::vector<TableId>& all_tables() {
    static const std::vector<TableId> ids = [] {
        std::vector<TableId> v;
        for (const auto& n : kNames) v.push_back(n.id);
        return v;
    }();
    return ids;
}

void TableSpec::validate() const {
    auto check = [](const std::vector<double>& v, const char* name) {
        if (v.empty()) throw DomainError(std::string("TableSpec.") + name + " is empty");
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] > v[i - 1])) throw DomainError(std::string("TableSpec.") + name + " must be strictly increasing");
    };
    check(g_ai_grid, "g_ai_grid");
    check(rho_grid, "rho_grid");
    if (theta_set.empty()) throw DomainError("TableSpec.theta_set is empty");
}

TableSpec default_table_spec(TableId id) {
    TableSpec s;
    s.id = id;
    switch (id) {
        case TableId::t1:
        case TableId::t2: break;
        case TableId::t3a: s.p4 = 3e-5; s.T = 50.0; break;
        case TableId::t3b: s.p3 = 3e-5; s.T = 50.0; break;
        case TableId::t3c: s.p3 = 0.3; s.p4 = 0.3; break;
        case TableId::t4: s.theta_set = {1.0001, 2.0}; break;
        case TableId::t5a: s.theta_set = {1.0}; s.T = 100.0; break;
        case TableId::t5b: s.theta_set = {1.0}; s.p3 = 0.1; break;
        case TableId::t5c: s.theta_set = {1.0}; s.p3 = 0.1; s.p4 = 0.1; s.T = 50.0; break;
        case TableId::t5d: s.theta_set = {1.0001}; break;
    }
    return s;
}

TableSpec table_spec_from(TableId id, const RunConfig& config) {
    TableSpec s = default_table_spec(id);
    if (config.g_ai_grid) s.g_ai_grid = *config.g_ai_grid;
    if (config.rho_grid) s.rho_grid = *config.rho_grid;
    if (config.theta_set) s.theta_set = *config.theta_set;
    if (config.p3) s.p3 = *config.p3;
    if (config.p4) s.p4 = *config.p4;
    if (config.T) s.T = *config.T;
    if (config.epsilon) s.epsilon = config.epsilon;
    s.validate();
    return s;
}

std::string Cell::token() const {
    switch (kind) {
        case Kind::number: return value > 0.0 || log_value == -std::numeric_limits<double>::infinity()
                                      ? format_number(value)
                                      : format_from_log(log_value);
        case Kind::sentinel: return to_string(outcome);
        case Kind::error: return "ERROR:" + error;
    }
    return "";
}

Cell evaluate_cell(const TableSpec& spec, double theta, double g_ai, double rho, const CellParams& params) {
    try {
        const ScenarioSpec scen = cell_scenario(theta, g_ai, rho, params);
        SolverOptions opts;
        opts.root.rel_tol = params.root_tol;
        opts.quadrature.abs_tol = params.quad_tol;
        opts.quadrature.rel_tol = params.quad_tol;
        switch (spec.id) {
            case TableId::t1: return outcome_cell(solve_extinction_time(scen, opts));
            case TableId::t2: return outcome_cell(solve_p3_immediate(scen, opts));
            case TableId::t3a: return outcome_cell(solve_p3_delayed(scen, spec.p4, spec.T, opts));
            case TableId::t3b: return outcome_cell(solve_p4_delayed(scen, spec.p3, spec.T, opts));
            case TableId::t3c: return outcome_cell(solve_T_delayed(scen, spec.p3, spec.p4, opts));
            case TableId::t4: return outcome_cell(solve_epsilon_mounting(scen, opts));
            case TableId::t5a: return ev_cell(ev_panel(scen, PanelA{spec.T}, opts.quadrature));
            case TableId::t5b: return ev_cell(ev_panel(scen, PanelB{spec.p3}, opts.quadrature));
            case TableId::t5c:
                return ev_cell(ev_panel(scen, PanelC{spec.p3, spec.p4, spec.T}, opts.quadrature));
            case TableId::t5d: {
                double eps = 0.0;
                if (spec.epsilon) {
                    eps = *spec.epsilon;
                } else {
                    const SolveOutcome solved = solve_epsilon_mounting(scen, opts);
                    if (!solved.has_value()) return outcome_cell(solved);
                    eps = solved.x;
                }
                return ev_cell(ev_panel(scen, PanelD{eps}, opts.quadrature));
            }
        }
        throw DomainError("unknown table");
    } catch (const std::exception& e) {
        Cell c;
        c.kind = Cell::Kind::error;
        c.value = std::numeric_limits<double>::quiet_NaN();
        c.error = sanitize(e.what());
        return c;
    }
}

TableResult compute_table(const TableSpec& spec, const CellParams& params) {
    spec.validate();
    TableResult result;
    result.spec = spec;
    result.c0 = params.c0;

    std::vector<std::vector<std::vector<std::future<Cell>>>> pending(spec.theta_set.size());
    for (std::size_t i = 0; i < spec.theta_set.size(); ++i) {
        pending[i].resize(spec.g_ai_grid.size());
        for (std::size_t j = 0; j < spec.g_ai_grid.size(); ++j) {
            for (std::size_t k = 0; k < spec.rho_grid.size(); ++k) {
                pending[i][j].push_back(std::async(std::launch::async, evaluate_cell, std::cref(spec),
                                                   spec.theta_set[i], spec.g_ai_grid[j],
                                                   spec.rho_grid[k], std::cref(params)));
            }
        }
    }
    result.cells.resize(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        result.cells[i].resize(pending[i].size());
        for (std::size_t j = 0; j < pending[i].size(); ++j)
            for (auto& f : pending[i][j]) result.cells[i][j].push_back(f.get());
    }
    return result;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    if (x != 0.0 && std::abs(x) < 1e-3) {
        std::snprintf(buf, sizeof buf, "%.5e", x);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", x);
    }
    return buf;
}

std::string format_from_log(double log_x) {
    if (log_x > -700.0) return format_number(std::exp(log_x));
    const double log10_x = log_x / std::log(10.0);
    double exponent = std::floor(log10_x);
    double mantissa = std::pow(10.0, log10_x - exponent);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5f", mantissa);
    if (buf[0] == '1' && buf[1] == '0') {  // rounding carried to 10.00000
        mantissa /= 10.0;
        exponent += 1.0;
        std::snprintf(buf, sizeof buf, "%.5f", mantissa);
    }
    std::ostringstream out;
    out << buf << "e-" << static_cast<long long>(-exponent);
    return out.str();
}

std::string format_table(const TableResult& table, OutputFormat format) {
    const TableSpec& s = table.spec;
    std::vector<std::string> header{"g_ai"};
    for (double theta : s.theta_set)
        for (double rho : s.rho_grid) header.push_back("theta=" + grid_label(theta) + " rho=" + grid_label(rho));

    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < s.g_ai_grid.size(); ++j) {
        std::vector<std::string> row{grid_label(s.g_ai_grid[j])};
        for (std::size_t i = 0; i < s.theta_set.size(); ++i)
            for (std::size_t k = 0; k < s.rho_grid.size(); ++k) row.push_back(table.at(i, j, k).token());
        rows.push_back(std::move(row));
    }

    std::string out;
    if (format == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) out += ',';
                out += cells[c];
            }
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
    } else {
        out += "**" + to_string(s.id) + "**: " + caption(s.id) + " (c0 = " + format_number(table.c0) + ")\n\n";
        auto line = [&](const std::vector<std::string>& cells) {
            out += '|';
            for (const auto& c : cells) out += ' ' + c + " |";
            out += '\n';
        };
        line(header);
        out += '|';
        for (std::size_t c = 0; c < header.size(); ++c) out += c ? " ---: |" : " --- |";
        out += '\n';
        for (const auto& r : rows) line(r);
    }
    return out;
}

std::string emit_table(TableId id, const RunConfig& config) {
    const TableSpec spec = table_spec_from(id, config);
    CellParams params;
    params.c0 = config.c0 ? *config.c0 : calibrate_c0(Anchor{}, config.g_baseline);
    params.g_baseline = config.g_baseline;
    params.quad_tol = config.quad_tol;
    params.root_tol = config.root_tol;
    return format_table(compute_table(spec, params), config.output_format);
}

double calibrate_c0(const Anchor& anchor, double g_baseline) {
    if (anchor.table == TableId::t2 && anchor.theta == 1.0) {
        // W = log(c0)/rho + g/rho^2 for both scenarios, so p3 = 1 - W0/W_A is
        // linear in log c0.
        const double p = anchor.target;
        if (!(p > 0.0 && p < 1.0)) throw DomainError("calibrate_c0: Table 2 target must be in (0,1)");
        double log_c0 = ((1.0 - p) * anchor.g_ai - g_baseline) / (p * anchor.rho);
        if (log_c0 < 0.0 && log_c0 > -1e-12) log_c0 = 0.0;
        if (!(log_c0 >= 0.0)) throw DomainError("calibrate_c0: anchor implies c0 < 1");
        return std::exp(log_c0);
    }

    TableSpec spec = default_table_spec(anchor.table);
    auto value_at = [&](double log_c0) {
        CellParams params;
        params.c0 = std::exp(log_c0);
        params.g_baseline = g_baseline;
        const Cell cell = evaluate_cell(spec, anchor.theta, anchor.g_ai, anchor.rho, params);
        if (cell.kind != Cell::Kind::number)
            throw DomainError("calibrate_c0: anchor cell is " + cell.token() + " at log c0 = " + std::to_string(log_c0));
        return cell.value - anchor.target;
    };
    constexpr double kMaxLogC0 = 200.0;
    const double f_lo = value_at(0.0);
    if (f_lo == 0.0) return 1.0;
    const double f_hi = value_at(kMaxLogC0);
    if ((f_lo < 0.0) == (f_hi < 0.0)) throw DomainError("calibrate_c0: no c0 >= 1 reproduces the anchor");
    const RootResult root = brent_root(value_at, 0.0, kMaxLogC0, f_lo, f_hi);
    return std::exp(root.root);
}

}  // namespace xrisk
