#include "xrisk/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "xrisk/errors.hpp"

namespace xrisk {
namespace {

struct Position {
    int line = 0;
    int key_column = 0;
    int value_column = 0;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

[[noreturn]] void fail_value(const std::string& what, const Position& pos) {
    throw ConfigError(what, pos.line, pos.value_column);
}

double parse_number(std::string_view text, std::string_view key, const Position& pos) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
        fail_value("invalid number '" + std::string(text) + "' for key " + std::string(key), pos);
    }
    return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view key, const Position& pos) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (item.empty()) fail_value("empty list entry for key " + std::string(key), pos);
        out.push_back(parse_number(item, key, pos));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void check(bool ok, std::string_view key, const std::string& requirement, const Position& pos) {
    if (!ok) fail_value(std::string(key) + " out of range: must be " + requirement, pos);
}

void require_increasing(const std::vector<double>& v, std::string_view key, const Position& pos) {
    for (std::size_t i = 1; i < v.size(); ++i) check(v[i] > v[i - 1], key, "strictly increasing", pos);
}

double probability(std::string_view value, std::string_view key, const Position& pos) {
    const double v = parse_number(value, key, pos);
    check(v >= 0.0 && v <= 1.0, key, "in [0,1]", pos);
    return v;
}

void set(RunConfig& c, std::string_view key, std::string_view value, const Position& pos) {
    auto number = [&] { return parse_number(value, key, pos); };
    if (key == "c0") {
        const double v = number();
        check(v >= 1.0, key, ">= 1", pos);
        c.c0 = v;
    } else if (key == "g_baseline") {
        const double v = number();
        check(v >= 0.0, key, ">= 0", pos);
        c.g_baseline = v;
    } else if (key == "g_ai_grid") {
        auto v = parse_list(value, key, pos);
        for (double g : v) check(g >= 0.0, key, "nonnegative", pos);
        require_increasing(v, key, pos);
        c.g_ai_grid = std::move(v);
    } else if (key == "rho_grid") {
        auto v = parse_list(value, key, pos);
        for (double r : v) check(r > 0.0, key, "positive", pos);
        require_increasing(v, key, pos);
        c.rho_grid = std::move(v);
    } else if (key == "theta_set") {
        auto v = parse_list(value, key, pos);
        for (double t : v) check(t > 0.0, key, "positive", pos);
        c.theta_set = std::move(v);
    } else if (key == "p1") {
        c.p1 = probability(value, key, pos);
    } else if (key == "p2") {
        c.p2 = probability(value, key, pos);
    } else if (key == "p3") {
        c.p3 = probability(value, key, pos);
    } else if (key == "p4") {
        c.p4 = probability(value, key, pos);
    } else if (key == "horizon_years") {
        const double v = number();
        check(v > 0.0, key, "> 0", pos);
        c.horizon_years = v;
    } else if (key == "T") {
        const double v = number();
        check(v >= 0.0, key, ">= 0", pos);
        c.T = v;
    } else if (key == "epsilon") {
        const double v = number();
        check(v >= 0.0, key, ">= 0", pos);
        c.epsilon = v;
    } else if (key == "saving_rate") {
        const double v = number();
        check(v >= 0.0 && v < 1.0, key, "in [0,1)", pos);
        c.saving_rate = v;
    } else if (key == "delta") {
        const double v = number();
        check(v >= 0.0, key, ">= 0", pos);
        c.delta = v;
    } else if (key == "tech_growth") {
        const double v = number();
        check(v >= 0.0, key, ">= 0", pos);
        c.tech_growth = v;
    } else if (key == "output_format") {
        if (value == "csv") c.output_format = OutputFormat::csv;
        else if (value == "markdown") c.output_format = OutputFormat::markdown;
        else fail_value("output_format must be csv or markdown, got '" + std::string(value) + "'", pos);
    } else if (key == "quad_tol") {
        const double v = number();
        check(v > 0.0, key, "> 0", pos);
        c.quad_tol = v;
    } else if (key == "root_tol") {
        const double v = number();
        check(v > 0.0, key, "> 0", pos);
        c.root_tol = v;
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'", pos.line, pos.key_column);
    }
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "c0", "g_baseline", "g_ai_grid", "rho_grid", "theta_set", "p1", "p2", "p3", "p4",
        "horizon_years", "T", "epsilon", "saving_rate", "delta", "tech_growth", "output_format",
        "quad_tol", "root_tol"};
    return keys;
}

RunConfig parse_config(std::string_view text) {
    RunConfig config;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        ++line_no;
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t lead = 0;
        const std::string_view body = trim(line, &lead);
        if (body.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected key=value", line_no, static_cast<int>(lead) + 1);
        const std::string_view key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("missing key before '='", line_no, static_cast<int>(eq) + 1);
        std::size_t value_lead = 0;
        const std::string_view value = trim(line.substr(eq + 1), &value_lead);
        Position pos{line_no, static_cast<int>(lead) + 1, static_cast<int>(eq + 1 + value_lead) + 1};
        if (value.empty()) throw ConfigError("missing value for key " + std::string(key), pos.line, pos.value_column);
        set(config, key, value, pos);
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    set(config, key, trim(value), Position{});
}

}  // namespace xrisk
