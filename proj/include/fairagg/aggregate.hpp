#pragma once

#include <cstdint>
#include <vector>

#include "fairagg/instance.hpp"

namespace fairagg {

/// Which unconstrained aggregator the pipeline runs inside each block.
struct AggregatorChoice {
    enum class Kind { kwiksort, exact_dp };

    Kind kind = Kind::exact_dp;
    std::uint64_t seed = 0; // kwiksort only
    int dp_cap = 15;        // exact_dp refuses blocks larger than this

    static AggregatorChoice exact_dp_choice(int cap = 15) { return {Kind::exact_dp, 0, cap}; }
    static AggregatorChoice kwiksort_choice(std::uint64_t seed) {
        return {Kind::kwiksort, seed, 15};
    }
};

/// Randomized pivot aggregation over a block of sub-rankings (all permutations
/// of one shared element set). A uniformly chosen pivot splits the block by
/// pairwise vote majority (exact ties go right), then both sides recurse.
/// Deterministic given the seed.
std::vector<int> kwiksort(const std::vector<std::vector<int>>& block_rankings,
                          std::uint64_t seed);

/// Optimal aggregation of a block by dynamic programming over element
/// subsets: extend the prefix one element at a time, charging each new element
/// the votes it loses against everything not yet placed. O(2^m m^2) time,
/// O(2^m) memory; cost ties prefer the smallest element id placed first.
/// Returns the ordering and its objective. Throws budget_exceeded past dp_cap.
std::pair<std::vector<int>, Count> exact_aggregate(
    const std::vector<std::vector<int>>& block_rankings, int dp_cap = 15);

/// Two-stage fair aggregation: solve the quota-satisfying bi-partition on the
/// vote tournament, aggregate the two blocks independently with the chosen
/// inner aggregator, and concatenate. The output is fair by construction.
std::pair<Ranking, Count> fair_aggregate(const Instance& inst, const AggregatorChoice& inner);

/// Baseline: the best closest-fair ranking among the inputs (ties by input
/// position).
std::pair<Ranking, Count> best_from_input(const Instance& inst);

} // namespace fairagg
