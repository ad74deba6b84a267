#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fairagg/instance.hpp"

namespace fairagg {

/// Adversarial two-block family on which the two-stage pipeline's objective
/// approaches twice the optimum as t grows. Universe of 2s + 2t candidates in
/// four runs A, B, C, D (ids in that order); group 1 = C u D, group 2 = A u B;
/// k = s + t with lower fractions t/(s+t) and s/(s+t), upper fractions 1.
struct TightParams {
    std::int64_t s = 1;
    std::int64_t t = 1;

    std::int64_t candidate_count() const { return 2 * s + 2 * t; }
    std::int64_t ranking_count() const { return candidate_count(); }
};

Instance gen_tight(const TightParams& p);

/// Closed-form objectives on the tight family: the optimal fair ranking's
/// objective d*s^2 - s, and the pipeline output's objective
/// 2*d*s^2 - (8*s^3 + s)/3. Both are exact integers.
std::pair<Count, Count> tight_closed_forms(const TightParams& p);

/// The two distinguished rankings of the family: the optimum (C, A, B, D) and
/// the pipeline's output (C, B, A, D).
Ranking tight_optimal_ranking(const TightParams& p);
Ranking tight_pipeline_ranking(const TightParams& p);

enum class RandomModel {
    uniform, // i.i.d. uniform permutations
    planted  // adjacent transpositions applied to a shared center ranking
};

/// Random instance with round-robin groups and proportional quotas
/// (alpha_i = beta_i = |G_i| / d), which are always feasible. In the planted
/// model each ranking is the center perturbed by `planted_swaps` random
/// adjacent transpositions.
Instance gen_random(int n, int d, int g, int k, RandomModel model, std::uint64_t seed,
                    int planted_swaps = 0);

/// Exact optimum by decomposition: enumerate every quota-satisfying prefix
/// set, add its cut cost to the optimal aggregation of both blocks. Throws
/// budget_exceeded beyond roughly d = 12.
std::pair<Ranking, Count> exact_fair_opt(const Instance& inst);

/// Exact optimum by full permutation enumeration; d <= 8.
std::pair<Ranking, Count> exact_fair_opt_enumerated(const Instance& inst);

/// For a planted reference ranking: the per-input sets of ordered pairs the
/// input ranks opposite to the reference. The set sizes are exactly the
/// Kendall tau distances to the reference.
struct AnalysisContext {
    Ranking sigma_star;
    std::vector<std::vector<std::pair<int, int>>> inversion_sets; // sorted pair lists
};

AnalysisContext build_analysis(const Instance& inst, const Ranking& sigma_star);

// Sorted intersection of two sorted pair lists.
std::vector<std::pair<int, int>> pair_intersection(const std::vector<std::pair<int, int>>& a,
                                                   const std::vector<std::pair<int, int>>& b);

// Sorted union of sorted pair lists.
std::vector<std::pair<int, int>> pair_union(const std::vector<std::pair<int, int>>& a,
                                            const std::vector<std::pair<int, int>>& b);

} // namespace fairagg
