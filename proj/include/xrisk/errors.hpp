#pragma once

#include <stdexcept>
#include <string>

namespace xrisk {

/// Invalid input value: a probability outside [0,1], consumption below the
/// subsistence threshold, a nonpositive rate, and the like.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A requested infinite-horizon integral does not converge for the given
/// discount and growth rates.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Quadrature or root-finding exhausted its budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range configuration. Line and column are 1-based;
/// zero means "not applicable" (e.g. a flag given on the command line).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + what
                                      : what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace xrisk
