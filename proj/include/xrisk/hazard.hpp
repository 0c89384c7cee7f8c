#pragma once

#include <functional>
#include <variant>

#include "xrisk/quadrature.hpp"

namespace xrisk {

/// m(t) = 0: humanity survives forever.
struct ZeroHazard {};

/// m(t) = rate. Background risk; expected lifespan 1/rate.
struct ConstantHazard {
    double rate;
};

/// Certain extinction at t_ext: M(t) = 1 before, 0 from t_ext on. Modeled as a
/// step in survival rather than as a rate.
struct OneOffHazard {
    double t_ext;
};

/// Hazard proportional to log consumption along C(t) = c0 exp(growth t):
/// m(t) = epsilon * (log c0 + growth * t).
struct MountingLogHazard {
    double epsilon;
    double c0;
    double growth;
};

/// m(t) = m_bar * C(t)^epsilon * H(t)^(-beta) for caller-supplied consumption
/// and safety-goods paths. Evaluated only; no optimal H is computed.
struct SafetyGoodsHazard {
    double m_bar;
    double epsilon;
    double beta;
    std::function<double(double)> consumption;
    std::function<double(double)> safety;
};

using HazardModel =
    std::variant<ZeroHazard, ConstantHazard, OneOffHazard, MountingLogHazard, SafetyGoodsHazard>;

/// Rejects negative rates, times and elasticities, c0 < 1 or negative growth in
/// the mounting model, and missing paths in the safety-goods model.
void validate(const HazardModel& model);

/// Instantaneous hazard at t >= 0. The one-off model reports 0 before t_ext
/// and +inf from t_ext on.
double hazard_rate(const HazardModel& model, double t);

/// integral_0^t m(s) ds; +inf once a one-off extinction has happened.
double cumulative_hazard(const HazardModel& model, double t);

/// log M(t) = -cumulative_hazard(t).
double log_survival(const HazardModel& model, double t);

/// M(t) = exp(-cumulative_hazard(t)).
double survival(const HazardModel& model, double t);

/// ET = integral_0^inf M(t) dt, in closed form where one exists (numeric for
/// the safety-goods model). Returns +inf when survival never decays.
double expected_lifespan(const HazardModel& model);

/// ET by adaptive quadrature of M(t); the independent check of the closed
/// forms.
double expected_lifespan_quadrature(const HazardModel& model, const QuadratureOptions& options = {});

}  // namespace xrisk
