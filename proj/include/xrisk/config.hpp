#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xrisk {

enum class OutputFormat { csv, markdown };

/// Run settings loaded from a `key=value` file and overridden by flags.
/// Unset optionals fall back to per-table defaults (grids, theta set, panel
/// constants) or to calibration (c0).
struct RunConfig {
    std::optional<double> c0;
    double g_baseline = 0.0175;
    std::optional<std::vector<double>> g_ai_grid;
    std::optional<std::vector<double>> rho_grid;
    std::optional<std::vector<double>> theta_set;
    std::optional<double> p1, p2, p3, p4;
    double horizon_years = 20.0;
    std::optional<double> T;
    std::optional<double> epsilon;
    double saving_rate = 0.3;
    double delta = 0.05;
    double tech_growth = 0.0;
    OutputFormat output_format = OutputFormat::csv;
    double quad_tol = 1e-10;
    double root_tol = 1e-10;
};

/// Keys accepted by parse_config and apply_setting, in documentation order.
const std::vector<std::string>& config_keys();

/// Parses line-oriented `key=value` text; `#` starts a comment. Throws
/// ConfigError with line and column on malformed lines, unknown keys and
/// out-of-range values.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. I/O failures are ConfigErrors too.
RunConfig load_config(const std::string& path);

/// Applies one setting, e.g. from a command-line flag. Same validation as
/// parse_config; errors carry no position.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

}  // namespace xrisk
