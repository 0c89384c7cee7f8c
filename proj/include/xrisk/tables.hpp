#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xrisk/config.hpp"
#include "xrisk/indifference.hpp"

namespace xrisk {

enum class TableId { t1, t2, t3a, t3b, t3c, t4, t5a, t5b, t5c, t5d };

std::string to_string(TableId id);
std::optional<TableId> parse_table_id(std::string_view text);
const std::vector<TableId>& all_tables();

/// Grid and fixed parameters of one table. Panel constants that a table does
/// not use are ignored.
struct TableSpec {
    TableId id = TableId::t1;
    std::vector<double> g_ai_grid{0.05, 0.1, 0.2, 0.3, 0.4};
    std::vector<double> rho_grid{0.002, 0.01, 0.03, 0.05};
    std::vector<double> theta_set{1.0, 2.0};
    double p3 = 0.0;
    double p4 = 0.0;
    double T = 0.0;
    /// Panel D only: fixed epsilon instead of the per-cell Table 4 solution.
    std::optional<double> epsilon;

    /// Throws DomainError on empty or non-increasing grids.
    void validate() const;
};

/// Published layout: t3a p4 = 3e-5, T = 50; t3b p3 = 3e-5, T = 50;
/// t3c p3 = p4 = 0.3; t5a T = 100; t5b p3 = 0.1; t5c p3 = p4 = 0.1, T = 50.
/// theta {1, 2} for t1-t3, {1.0001, 2} for t4, {1} for t5a-c and {1.0001}
/// for t5d, which shares the near-log setting of the epsilon it compares.
TableSpec default_table_spec(TableId id);

/// Defaults overridden by the grids, theta set and panel constants of `config`.
TableSpec table_spec_from(TableId id, const RunConfig& config);

/// One table entry: a number, a solver sentinel, or a per-cell error.
struct Cell {
    enum class Kind { number, sentinel, error };
    Kind kind = Kind::number;
    double value = 0.0;
    /// Natural log of the value; used for EVs that underflow a double.
    double log_value = 0.0;
    OutcomeKind outcome = OutcomeKind::value;
    std::string error;

    /// The printed token: formatted number, sentinel name or ERROR:<reason>.
    std::string token() const;
};

struct CellParams {
    double c0 = 1.0;
    double g_baseline = 0.0175;
    double quad_tol = 1e-10;
    double root_tol = 1e-10;
};

/// Evaluates one cell; solver errors are returned as error cells.
Cell evaluate_cell(const TableSpec& spec, double theta, double g_ai, double rho, const CellParams& params);

struct TableResult {
    TableSpec spec;
    double c0 = 1.0;
    /// cells[theta][g_ai][rho], in grid order.
    std::vector<std::vector<std::vector<Cell>>> cells;

    const Cell& at(std::size_t theta, std::size_t g, std::size_t rho) const {
        return cells.at(theta).at(g).at(rho);
    }
};

/// Evaluates every cell concurrently and returns them in grid order.
TableResult compute_table(const TableSpec& spec, const CellParams& params);

/// 6 significant digits; scientific notation below 1e-3 in magnitude.
std::string format_number(double x);
/// Same format for exp(log_x), valid when exp underflows.
std::string format_from_log(double log_x);

std::string format_table(const TableResult& table, OutputFormat format);

/// Resolves c0 (calibrating when unset), computes and formats the table.
std::string emit_table(TableId id, const RunConfig& config);

/// A published table entry used to recover c0.
struct Anchor {
    TableId table = TableId::t2;
    double theta = 1.0;
    double g_ai = 0.05;
    double rho = 0.05;
    double target = 0.055282;
};

/// c0 >= 1 at which the anchor cell evaluates to its target. Closed form for
/// theta = 1 Table 2 anchors, Brent on log c0 in [0, 200] otherwise. Throws
/// DomainError when no c0 >= 1 matches.
double calibrate_c0(const Anchor& anchor = {}, double g_baseline = 0.0175);

}  // namespace xrisk
