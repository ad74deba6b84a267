#pragma once

#include <vector>

#include "fairagg/instance.hpp"
#include "fairagg/tournament.hpp"

namespace fairagg {

/// A size-k prefix set L and its implicit complement.
struct Bipartition {
    std::vector<int> left; // sorted candidate ids, |left| == k
    int universe_size = 0;

    std::vector<int> right() const;
};

/// Total votes crossing against the split: sum of counts(y, x) over x in L,
/// y outside L. Equals the cross-block objective of any ranking that places
/// all of L ahead of the rest.
Count cut_cost(const CountTournament& t, const std::vector<int>& left);

/// Minimum-cost quota-satisfying prefix set of size k.
///
/// Three phases over the in-degree order: seed each group with its lower
/// quota, then fill to k from the remaining candidates in non-decreasing
/// in-degree order, skipping candidates whose group already hit its upper
/// quota. Exact on tournaments satisfying the vote-complement and triangle
/// constraints. Ties in in-degree break by ascending candidate id in both
/// sorts, so the output is deterministic.
Bipartition colorful_bipartition(const CountTournament& t, const GroupedUniverse& u,
                                 const FairnessSpec& spec);

/// Exhaustive minimum over every quota-satisfying k-subset. Guarded: throws
/// budget_exceeded once the subset count passes `max_subsets`. Returns the
/// lexicographically smallest argmin.
std::pair<Bipartition, Count> bipartition_oracle(const CountTournament& t,
                                                 const GroupedUniverse& u,
                                                 const FairnessSpec& spec,
                                                 std::int64_t max_subsets = 10'000'000);

/// Cost change of swapping x (inside L) with y (outside L); equals
/// in_degree(y) - in_degree(x) on any tournament with complementary votes.
Count swap_cost_delta(const CountTournament& t, const std::vector<int>& left, int x, int y);

} // namespace fairagg
