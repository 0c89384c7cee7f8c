#pragma once

#include <vector>

namespace xrisk {

/// Piecewise exponential consumption path, stored in log space.
///
/// Segment i starts at `start` with log level `log_level` and grows at
/// `growth` per year until the next segment starts. Levels are normalized to
/// the subsistence threshold, so log C(t) >= 0 is required wherever the path
/// feeds a utility or log-consumption hazard.
class ConsumptionPath {
public:
    struct Segment {
        double start;
        double log_level;
        double growth;
    };

    /// C(t) = c0 * exp(growth * t).
    static ConsumptionPath exponential(double c0, double growth);

    /// Segments must be nonempty, start at t = 0 and have increasing starts.
    explicit ConsumptionPath(std::vector<Segment> segments);

    double log_consumption(double t) const;
    double consumption(double t) const;

    /// Largest per-year growth rate over all segments.
    double max_growth() const noexcept;

    const std::vector<Segment>& segments() const noexcept { return segments_; }

    /// True when the path is a single exponential segment.
    bool is_exponential() const noexcept { return segments_.size() == 1; }

private:
    std::vector<Segment> segments_;
};

}  // namespace xrisk
