#pragma once

#include <cstdint>
#include <vector>

#include "fairagg/instance.hpp"
#include "fairagg/tournament.hpp"

namespace fairagg {

/// An ordering of the tournament's vertices together with the number of edges
/// it leaves pointing backwards. Deleting exactly those back edges makes the
/// tournament acyclic with the ordering as a topological order, so the
/// ordering doubles as the ranking read off the feedback-arc-set step.
struct FasResult {
    std::vector<int> ordering;
    Count back_edge_count = 0;
};

enum class FasMode {
    exact_dp,          // minimum back edges by subset DP; needs size <= dp_cap
    pivot_local_search // random pivots, then single-vertex moves to a local opt
};

FasResult fas_order(const MajorityTournament& g, FasMode mode, std::uint64_t seed,
                    int dp_cap = 15);

/// Knobs for the randomized variant: triples are drawn from a subsample with
/// inclusion probability min(1, 4 * oversampling * ln(n) / n), and the winner
/// is chosen against an importance-sampled weighted subset instead of the
/// full input.
struct FastConfig {
    double oversampling = 50.0; // must exceed 1
    double gamma = 0.01;        // coreset accuracy knob, in (0, 1)
    std::uint64_t seed = 0;

    void validate() const;
};

/// Candidate generation shared by both variants: one closest-fair ranking per
/// input, plus one per 3-combination of `triple_pool` (majority tournament ->
/// feedback-arc ordering -> closest fair). Candidates keep insertion order.
std::vector<Ranking> generic_candidates(const Instance& inst,
                                        const std::vector<Ranking>& triple_pool,
                                        FasMode mode, std::uint64_t seed);

/// Fairness-notion-agnostic aggregation: evaluate every candidate against the
/// full input and return the first minimizer.
std::pair<Ranking, Count> generic_fair_ra(const Instance& inst, FasMode mode,
                                          std::uint64_t seed);

/// Independent inclusion sample of the input rankings at rate
/// min(1, 4 * s * ln(n) / n). Deterministic given config.seed.
std::vector<Ranking> sample_candidates(const std::vector<Ranking>& rankings,
                                       const FastConfig& config);

/// One-center sensitivity sample: scores proportional to distance from the
/// best input median plus a uniform floor, ceil(24 * ln(n) / gamma^2) draws
/// with replacement, inverse-probability weights merged per ranking and
/// rescaled so the weights sum to exactly n.
WeightedRankingSet build_coreset(const std::vector<Ranking>& rankings,
                                 const FastConfig& config);

/// Index of the candidate with the smallest weighted objective (ties: first).
std::size_t argmin_weighted(const std::vector<Ranking>& candidates,
                            const WeightedRankingSet& coreset);

/// Randomized variant: triples come from the subsample only, the winner is
/// picked against the coreset, and the reported objective is recomputed
/// exactly against the full input.
std::pair<Ranking, Count> generic_fair_ra_fast(const Instance& inst, const FastConfig& config,
                                               FasMode mode);

} // namespace fairagg
