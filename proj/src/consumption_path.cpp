#include "xrisk/consumption_path.hpp"

#include <algorithm>
#include <cmath>

#include "xrisk/errors.hpp"

namespace xrisk {

ConsumptionPath ConsumptionPath::exponential(double c0, double growth) {
    if (!(c0 > 0.0)) throw DomainError("consumption path: c0 must be positive");
    return ConsumptionPath({{0.0, std::log(c0), growth}});
}

ConsumptionPath::ConsumptionPath(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw DomainError("consumption path: no segments");
    if (segments_.front().start != 0.0)
        throw DomainError("consumption path: first segment must start at t = 0");
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (!(segments_[i].start > segments_[i - 1].start))
            throw DomainError("consumption path: segment starts must increase");
    }
    for (const auto& s : segments_) {
        if (!std::isfinite(s.log_level) || !std::isfinite(s.growth))
            throw DomainError("consumption path: nonfinite segment");
    }
}

double ConsumptionPath::log_consumption(double t) const {
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double x, const Segment& s) { return x < s.start; });
    const Segment& s = (it == segments_.begin()) ? segments_.front() : *std::prev(it);
    return s.log_level + s.growth * (t - s.start);
}

double ConsumptionPath::consumption(double t) const { return std::exp(log_consumption(t)); }

double ConsumptionPath::max_growth() const noexcept {
    double g = segments_.front().growth;
    for (const auto& s : segments_) g = std::max(g, s.growth);
    return g;
}

}  // namespace xrisk
