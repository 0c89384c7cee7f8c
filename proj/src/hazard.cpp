#include "xrisk/hazard.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xrisk/errors.hpp"
#include "xrisk/special_functions.hpp"

namespace xrisk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_time(double t) {
    if (!(t >= 0.0)) throw DomainError("hazard: time " + std::to_string(t) + " must be >= 0");
}

double mounting_rate(const MountingLogHazard& h, double t) {
    const double log_c = std::log(h.c0) + h.growth * t;
    if (log_c < 0.0) {
        throw DomainError("mounting_log hazard: consumption below 1 at t = " + std::to_string(t));
    }
    return h.epsilon * log_c;
}

double safety_rate(const SafetyGoodsHazard& h, double t) {
    const double c = h.consumption(t);
    const double s = h.safety(t);
    if (!(c > 0.0)) throw DomainError("safety_goods hazard: consumption must be positive");
    if (h.beta > 0.0 && !(s > 0.0)) {
        throw DomainError("safety_goods hazard: H(t) <= 0 with beta > 0 at t = " +
                          std::to_string(t));
    }
    return h.m_bar * std::pow(c, h.epsilon) * std::pow(s, -h.beta);
}

}  // namespace

void validate(const HazardModel& model) {
    std::visit(Overloaded{
                   [](const ZeroHazard&) {},
                   [](const ConstantHazard& h) {
                       if (!(h.rate >= 0.0) || !std::isfinite(h.rate))
                           throw DomainError("constant hazard: rate must be finite and >= 0");
                   },
                   [](const OneOffHazard& h) {
                       if (!(h.t_ext >= 0.0))
                           throw DomainError("one_off hazard: t_ext must be >= 0");
                   },
                   [](const MountingLogHazard& h) {
                       if (!(h.epsilon >= 0.0) || !std::isfinite(h.epsilon))
                           throw DomainError("mounting_log hazard: epsilon must be >= 0");
                       if (!(h.c0 >= 1.0))
                           throw DomainError("mounting_log hazard: c0 must be >= 1");
                       if (!(h.growth >= 0.0) || !std::isfinite(h.growth))
                           throw DomainError("mounting_log hazard: growth must be >= 0");
                   },
                   [](const SafetyGoodsHazard& h) {
                       if (!(h.m_bar >= 0.0))
                           throw DomainError("safety_goods hazard: m_bar must be >= 0");
                       if (!h.consumption || !h.safety)
                           throw DomainError("safety_goods hazard: consumption and safety paths required");
                   },
               },
               model);
}

double hazard_rate(const HazardModel& model, double t) {
    require_time(t);
    return std::visit(Overloaded{
                          [](const ZeroHazard&) { return 0.0; },
                          [](const ConstantHazard& h) { return h.rate; },
                          [t](const OneOffHazard& h) { return t < h.t_ext ? 0.0 : kInf; },
                          [t](const MountingLogHazard& h) { return mounting_rate(h, t); },
                          [t](const SafetyGoodsHazard& h) { return safety_rate(h, t); },
                      },
                      model);
}

double cumulative_hazard(const HazardModel& model, double t) {
    require_time(t);
    return std::visit(
        Overloaded{
            [](const ZeroHazard&) { return 0.0; },
            [t](const ConstantHazard& h) { return h.rate * t; },
            [t](const OneOffHazard& h) { return t < h.t_ext ? 0.0 : kInf; },
            [t](const MountingLogHazard& h) {
                mounting_rate(h, t);
                return h.epsilon * (std::log(h.c0) * t + 0.5 * h.growth * t * t);
            },
            [t](const SafetyGoodsHazard& h) {
                if (t == 0.0) return 0.0;
                auto rate = [&h](double s) { return safety_rate(h, s); };
                return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(rate, 0.0, t, 15,
                                                                                    1e-12);
            },
        },
        model);
}

double log_survival(const HazardModel& model, double t) { return -cumulative_hazard(model, t); }

double survival(const HazardModel& model, double t) { return std::exp(log_survival(model, t)); }

double expected_lifespan(const HazardModel& model) {
    validate(model);
    return std::visit(
        Overloaded{
            [](const ZeroHazard&) { return kInf; },
            [](const ConstantHazard& h) { return h.rate > 0.0 ? 1.0 / h.rate : kInf; },
            [](const OneOffHazard& h) { return h.t_ext; },
            [](const MountingLogHazard& h) {
                const double log_c0 = std::log(h.c0);
                if (h.epsilon == 0.0 || (log_c0 == 0.0 && h.growth == 0.0)) return kInf;
                if (h.growth == 0.0) return 1.0 / (h.epsilon * log_c0);
                const double scale = std::sqrt(std::numbers::pi / (2.0 * h.epsilon * h.growth));
                if (log_c0 == 0.0) return scale;
                // exp(a^2) * (1 - erf(a)) in scaled form: the two factors
                // over/underflow separately for large a.
                const double a = std::sqrt(h.epsilon) * log_c0 / std::sqrt(2.0 * h.growth);
                return scale * erfcx(a);
            },
            [](const SafetyGoodsHazard& h) { return expected_lifespan_quadrature(h); },
        },
        model);
}

double expected_lifespan_quadrature(const HazardModel& model, const QuadratureOptions& options) {
    validate(model);
    auto one = [](double) { return 1.0; };
    auto log_m = [&model](double t) { return log_survival(model, t); };
    return std::visit(
        Overloaded{
            [](const ZeroHazard&) { return kInf; },
            [&](const ConstantHazard& h) {
                if (h.rate == 0.0) return kInf;
                return integrate_discounted(one, log_m, kScaleFraction * h.rate, kInfiniteHorizon, options).value;
            },
            [&](const OneOffHazard& h) {
                if (h.t_ext == 0.0) return 0.0;
                return integrate_discounted(one, log_m, 1.0 / h.t_ext, h.t_ext, options).value;
            },
            [&](const MountingLogHazard& h) {
                const double log_c0 = std::log(h.c0);
                if (h.epsilon == 0.0 || (log_c0 == 0.0 && h.growth == 0.0)) return kInf;
                const double rate =
                    kScaleFraction * std::max(h.epsilon * log_c0, std::sqrt(h.epsilon * h.growth));
                return integrate_discounted(one, log_m, rate, kInfiniteHorizon, options).value;
            },
            [&](const SafetyGoodsHazard& h) {
                const double rate = kScaleFraction * std::max(safety_rate(h, 0.0), 1e-6);
                return integrate_discounted(one, log_m, rate, kInfiniteHorizon, options).value;
            },
        },
        model);
}

}  // namespace xrisk
