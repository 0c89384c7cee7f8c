#pragma once

namespace xrisk {

/// Branch probabilities of the outcome tree: TAI arrival by the horizon (p1),
/// takeover given TAI (p2), misalignment given takeover (p3) and
/// non-corrigibility given an aligned takeover (p4).
///
/// Validated on construction. The horizon is carried for reporting only; p1 is
/// taken as already conditioned on it.
class TaxonomyProbs {
public:
    TaxonomyProbs(double p1, double p2, double p3, double p4, double horizon_years);

    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }
    double p3() const noexcept { return p3_; }
    double p4() const noexcept { return p4_; }
    double horizon_years() const noexcept { return horizon_years_; }

private:
    double p1_, p2_, p3_, p4_, horizon_years_;
};

/// Probabilities of the five leaves of the tree. Sums to one.
struct LeafDistribution {
    double no_tai;
    double tai_no_takeover;
    double cornucopia;
    double doom_immediate;
    double doom_delayed;

    double sum() const noexcept {
        return no_tai + tai_no_takeover + cornucopia + doom_immediate + doom_delayed;
    }
};

LeafDistribution leaf_distribution(const TaxonomyProbs& probs) noexcept;

/// p1 p2 p3 + p1 p2 (1 - p3) p4, computed as the sum of the two doom leaves.
double p_doom(const TaxonomyProbs& probs) noexcept;

}  // namespace xrisk
