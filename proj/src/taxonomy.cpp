#include "xrisk/taxonomy.hpp"

#include <cmath>
#include <string>

#include "xrisk/errors.hpp"

namespace xrisk {
namespace {

void check_probability(const char* name, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(name) + " = " + std::to_string(p) +
                          " is not a probability in [0,1]");
    }
}

}  // namespace

TaxonomyProbs::TaxonomyProbs(double p1, double p2, double p3, double p4, double horizon_years)
    : p1_(p1), p2_(p2), p3_(p3), p4_(p4), horizon_years_(horizon_years) {
    check_probability("p1", p1);
    check_probability("p2", p2);
    check_probability("p3", p3);
    check_probability("p4", p4);
    if (!(horizon_years > 0.0) || !std::isfinite(horizon_years)) {
        throw DomainError("horizon_years = " + std::to_string(horizon_years) +
                          " must be positive and finite");
    }
}

LeafDistribution leaf_distribution(const TaxonomyProbs& probs) noexcept {
    const double takeover = probs.p1() * probs.p2();
    const double aligned = takeover * (1.0 - probs.p3());
    return LeafDistribution{
        .no_tai = 1.0 - probs.p1(),
        .tai_no_takeover = probs.p1() * (1.0 - probs.p2()),
        .cornucopia = aligned * (1.0 - probs.p4()),
        .doom_immediate = takeover * probs.p3(),
        .doom_delayed = aligned * probs.p4(),
    };
}

double p_doom(const TaxonomyProbs& probs) noexcept {
    const LeafDistribution leaves = leaf_distribution(probs);
    return leaves.doom_immediate + leaves.doom_delayed;
}

}  // namespace xrisk
