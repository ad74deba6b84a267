#pragma once

#include "fairagg/instance.hpp"

namespace fairagg {

/// Fair ranking at minimum Kendall tau distance from pi.
///
/// Solves the quota-satisfying bi-partition on pi's own pairwise tournament
/// (where in-degree is just position minus one, so the split is exact) and
/// keeps pi's relative order inside both blocks; any within-block deviation
/// could only add inversions. The returned distance equals the cut cost.
std::pair<Ranking, Count> closest_fair_ranking(const Ranking& pi, const GroupedUniverse& u,
                                               const FairnessSpec& spec);

/// Ground truth by enumeration. Tries full permutation enumeration (d <= 8)
/// and quota-satisfying prefix-set enumeration with within-block order copied
/// from pi; when both fit the budget they are cross-checked against each
/// other. Throws budget_exceeded when neither fits.
std::pair<Ranking, Count> closest_fair_oracle(const Ranking& pi, const GroupedUniverse& u,
                                              const FairnessSpec& spec);

} // namespace fairagg
