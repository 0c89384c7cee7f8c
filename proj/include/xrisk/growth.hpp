#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xrisk/consumption_path.hpp"
#include "xrisk/hazard.hpp"

namespace xrisk {

/// Hardware-software production: Y = F(X, S) with hardware X = alpha K + L and
/// F a CES aggregate with weight share_hw on hardware.
struct ProductionParams {
    double alpha = 1.0;  ///< hardware efficiency of capital
    double gamma = 1.0;  ///< software efficiency when humans bottleneck it
    double A = 1.0;      ///< technology level at t = 0
    double h = 1.0;      ///< average human capital
    double N = 1.0;      ///< population
    double L = 0.0;      ///< human physical labor
    double psi = 1.0;    ///< algorithmic efficiency
    double chi = 1.0;    ///< compute share of capital
    double sigma = -1.0; ///< CES exponent; elasticity 1/(1 - sigma)
    double share_hw = 0.5;

    void validate() const;
};

enum class Regime {
    full_automation,  ///< S = A (h N + psi chi K)
    bottlenecked,     ///< S = gamma A h N
};

/// [w X^sigma + (1 - w) S^sigma]^(1/sigma).
double ces_production(double X, double S, double sigma, double share_hw);

/// Output at capital K and technology level A (defaults to params.A).
double output(const ProductionParams& params, double K, Regime regime);
double output(const ProductionParams& params, double K, double A, Regime regime);

/// a_K = F(1, A psi chi / alpha): the limit of Y / (alpha K) under full
/// automation as K / N grows.
double asymptotic_capital_productivity(const ProductionParams& params);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> K;
    std::vector<double> Y;
    std::vector<double> C;
    Regime regime = Regime::full_automation;
    double saving_rate = 0.0;
    double delta = 0.0;
    double tech_growth = 0.0;
};

struct SimulationSettings {
    double K0 = 1.0;
    double saving_rate = 0.3;
    double delta = 0.05;
    double tech_growth = 0.0;
    double horizon = 200.0;
    double dt = 0.05;
};

/// RK4 on dK/dt = s Y - delta K with A(t) = A e^{tech_growth t} and
/// C = (1 - s) Y. Throws DomainError naming the time if K turns nonpositive.
Trajectory simulate(const ProductionParams& params, Regime regime, const SimulationSettings& settings);

/// Least-squares slope of log series over the final quarter of the samples.
double asymptotic_growth_rate(std::span<const double> times, std::span<const double> series);
double asymptotic_growth_rate(const Trajectory& trajectory);

enum class FailureMode { fm1, fm2, fm3, fm4, fm5 };

struct FailureModeSettings {
    double c0 = 1.0;
    double g_ai = 0.05;
    double g_baseline = 0.0175;
    double epsilon = 0.0;       ///< hazard elasticity for fm4
    double switch_time = 0.0;   ///< t_tech, t_C-dagger or t_stop
    double crash_factor = 1.0;  ///< fm5 consumption drop at t_stop
    /// fm5: absolute extinction date after the stop; empty means no hazard.
    std::optional<double> post_stop_extinction;
};

struct FailureModePath {
    ConsumptionPath path;
    HazardModel hazard;
    /// fm5 crash pushed consumption to the subsistence floor.
    bool existential_threat = false;
};

FailureModePath failure_mode_path(FailureMode mode, const FailureModeSettings& settings);

}  // namespace xrisk
