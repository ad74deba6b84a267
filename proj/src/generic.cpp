#include "fairagg/generic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairagg/closest_fair.hpp"
#include "fairagg/rng.hpp"

namespace fairagg {

namespace {

Count back_edges_of(const MajorityTournament& g, const std::vector<int>& ordering) {
    Count total = 0;
    for (std::size_t i = 0; i < ordering.size(); ++i)
        for (std::size_t j = i + 1; j < ordering.size(); ++j)
            if (g.has_edge(ordering[j], ordering[i])) ++total;
    return total;
}

FasResult fas_exact(const MajorityTournament& g, int dp_cap) {
    const int d = g.size();
    if (d > dp_cap || d > 22)
        throw budget_exceeded("fas_order: tournament of " + std::to_string(d) +
                              " exceeds the DP cap");
    const std::uint32_t full = (1u << d) - 1u;
    constexpr Count kUnset = -1;
    std::vector<Count> best(static_cast<std::size_t>(full) + 1, kUnset);
    std::vector<int> first_pick(static_cast<std::size_t>(full) + 1, -1);
    best[0] = 0;

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Count best_cost = kUnset;
        int best_v = -1;
        for (int v = 0; v < d; ++v) {
            if (!(mask & (1u << v))) continue;
            const std::uint32_t rest = mask & ~(1u << v);
            Count cost = best[rest];
            for (int u = 0; u < d; ++u)
                if ((rest & (1u << u)) && g.has_edge(u + 1, v + 1)) ++cost;
            if (best_cost == kUnset || cost < best_cost) {
                best_cost = cost;
                best_v = v;
            }
        }
        best[mask] = best_cost;
        first_pick[mask] = best_v;
    }

    FasResult result;
    result.back_edge_count = best[full];
    std::uint32_t mask = full;
    while (mask) {
        const int v = first_pick[mask];
        result.ordering.push_back(v + 1);
        mask &= ~(1u << v);
    }
    return result;
}

void pivot_segment(const MajorityTournament& g, std::vector<int>& segment,
                   std::mt19937_64& rng, std::vector<int>& out) {
    if (segment.empty()) return;
    if (segment.size() == 1) {
        out.push_back(segment.front());
        return;
    }
    const int pivot = segment[static_cast<std::size_t>(bounded(rng, segment.size()))];
    std::vector<int> left, right;
    for (int v : segment) {
        if (v == pivot) continue;
        (g.has_edge(v, pivot) ? left : right).push_back(v);
    }
    pivot_segment(g, left, rng, out);
    out.push_back(pivot);
    pivot_segment(g, right, rng, out);
}

// Single-vertex moves until no move reduces the back-edge count. The scan and
// the smallest-target tie rule keep the local optimum deterministic.
void local_search(const MajorityTournament& g, std::vector<int>& ordering) {
    const int d = static_cast<int>(ordering.size());
    bool improved = true;
    while (improved) {
        improved = false;
        for (int from = 0; from < d; ++from) {
            const int v = ordering[static_cast<std::size_t>(from)];
            Count best_delta = 0;
            int best_to = from;

            Count delta = 0;
            for (int to = from - 1; to >= 0; --to) {
                const int u = ordering[static_cast<std::size_t>(to)];
                delta += g.has_edge(u, v) ? 1 : -1;
                if (delta < best_delta || (delta == best_delta && delta < 0 && to < best_to)) {
                    best_delta = delta;
                    best_to = to;
                }
            }
            delta = 0;
            for (int to = from + 1; to < d; ++to) {
                const int u = ordering[static_cast<std::size_t>(to)];
                delta += g.has_edge(v, u) ? 1 : -1;
                if (delta < best_delta) {
                    best_delta = delta;
                    best_to = to;
                }
            }

            if (best_delta < 0) {
                ordering.erase(ordering.begin() + from);
                ordering.insert(ordering.begin() + best_to, v);
                improved = true;
            }
        }
    }
}

} // namespace

FasResult fas_order(const MajorityTournament& g, FasMode mode, std::uint64_t seed, int dp_cap) {
    if (mode == FasMode::exact_dp) return fas_exact(g, dp_cap);

    std::vector<int> all(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
    std::mt19937_64 rng = make_rng(seed);
    FasResult result;
    result.ordering.reserve(all.size());
    pivot_segment(g, all, rng, result.ordering);
    local_search(g, result.ordering);
    result.back_edge_count = back_edges_of(g, result.ordering);
    return result;
}

void FastConfig::validate() const {
    if (!(oversampling > 1.0)) throw invalid_input("oversampling constant must exceed 1");
    if (!(gamma > 0.0) || !(gamma < 1.0)) throw invalid_input("gamma must lie in (0, 1)");
}

namespace {

constexpr std::uint64_t kSampleSalt = 0x5a17;
constexpr std::uint64_t kCoresetSalt = 0xc0de;
constexpr std::uint64_t kTripleSaltBase = 0xfa5000;

} // namespace

std::vector<Ranking> generic_candidates(const Instance& inst,
                                        const std::vector<Ranking>& triple_pool,
                                        FasMode mode, std::uint64_t seed) {
    std::vector<Ranking> candidates;
    candidates.reserve(inst.rankings.size());
    for (const Ranking& pi : inst.rankings)
        candidates.push_back(closest_fair_ranking(pi, inst.universe, inst.spec).first);

    const std::size_t pool = triple_pool.size();
    std::uint64_t triple_counter = 0;
    for (std::size_t i = 0; i < pool; ++i) {
        for (std::size_t j = i + 1; j < pool; ++j) {
            for (std::size_t k = j + 1; k < pool; ++k) {
                const MajorityTournament g =
                    majority_tournament(triple_pool[i], triple_pool[j], triple_pool[k]);
                const FasResult fas =
                    fas_order(g, mode, derive_seed(seed, kTripleSaltBase + triple_counter));
                ++triple_counter;
                const Ranking consensus(fas.ordering);
                candidates.push_back(
                    closest_fair_ranking(consensus, inst.universe, inst.spec).first);
            }
        }
    }
    return candidates;
}

std::pair<Ranking, Count> generic_fair_ra(const Instance& inst, FasMode mode,
                                          std::uint64_t seed) {
    const std::vector<Ranking> candidates =
        generic_candidates(inst, inst.rankings, mode, seed);
    std::size_t best = 0;
    Count best_value = objective(inst, candidates.front());
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const Count value = objective(inst, candidates[i]);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
    }
    return {candidates[best], best_value};
}

std::vector<Ranking> sample_candidates(const std::vector<Ranking>& rankings,
                                       const FastConfig& config) {
    config.validate();
    const std::size_t n = rankings.size();
    if (n < 2) throw invalid_input("sample_candidates: need at least two rankings");
    const double rate =
        std::min(1.0, 4.0 * config.oversampling * std::log(static_cast<double>(n)) /
                          static_cast<double>(n));
    std::mt19937_64 rng = make_rng(derive_seed(config.seed, kSampleSalt));
    std::vector<Ranking> sampled;
    for (const Ranking& pi : rankings)
        if (uniform01(rng) < rate) sampled.push_back(pi);
    return sampled;
}

WeightedRankingSet build_coreset(const std::vector<Ranking>& rankings,
                                 const FastConfig& config) {
    config.validate();
    if (rankings.empty()) throw invalid_input("build_coreset: empty ranking set");
    const std::size_t n = rankings.size();

    // Center: the input that is itself the best median of the set.
    std::size_t center = 0;
    Count center_value = objective(rankings, rankings.front());
    for (std::size_t i = 1; i < n; ++i) {
        const Count value = objective(rankings, rankings[i]);
        if (value < center_value) {
            center_value = value;
            center = i;
        }
    }

    std::vector<Count> dist(n, 0);
    Count dist_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = kendall_tau(rankings[i], rankings[center]);
        dist_total += dist[i];
    }

    // Integer sampling scores: distance share plus a uniform 1/n floor, both
    // scaled by 2 * dist_total * n so thresholds stay integers.
    std::vector<Count> score(n, 1);
    Count score_total = static_cast<Count>(n);
    if (dist_total > 0) {
        score_total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            score[i] = dist[i] * static_cast<Count>(n) + dist_total;
            score_total += score[i];
        }
    }

    const std::int64_t draws = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(
               24.0 * std::log(static_cast<double>(n)) / (config.gamma * config.gamma))));

    std::vector<Count> cumulative(n);
    Count running = 0;
    for (std::size_t i = 0; i < n; ++i) {
        running += score[i];
        cumulative[i] = running;
    }

    std::mt19937_64 rng = make_rng(derive_seed(config.seed, kCoresetSalt));
    std::vector<std::int64_t> hits(n, 0);
    for (std::int64_t r = 0; r < draws; ++r) {
        const Count u = static_cast<Count>(bounded(rng, static_cast<std::uint64_t>(score_total)));
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        ++hits[static_cast<std::size_t>(it - cumulative.begin())];
    }

    // Inverse-probability weights, merged per ranking, rescaled to sum to n.
    std::vector<std::pair<Ranking, Rational>> items;
    Rational raw_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (hits[i] == 0) continue;
        const Rational weight =
            Rational(BigInt(hits[i]) * score_total, BigInt(draws) * score[i]);
        raw_sum += weight;
        items.emplace_back(rankings[i], weight);
    }
    const Rational scale = Rational(static_cast<Count>(n)) / raw_sum;
    for (auto& [pi, w] : items) w *= scale;
    return WeightedRankingSet(std::move(items));
}

std::size_t argmin_weighted(const std::vector<Ranking>& candidates,
                            const WeightedRankingSet& coreset) {
    if (candidates.empty()) throw invalid_input("argmin_weighted: no candidates");
    std::size_t best = 0;
    Rational best_value = weighted_objective(coreset, candidates.front());
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        Rational value = weighted_objective(coreset, candidates[i]);
        if (value < best_value) {
            best_value = std::move(value);
            best = i;
        }
    }
    return best;
}

std::pair<Ranking, Count> generic_fair_ra_fast(const Instance& inst, const FastConfig& config,
                                               FasMode mode) {
    config.validate();
    const std::vector<Ranking> subsample =
        inst.rankings.size() < 2 ? inst.rankings : sample_candidates(inst.rankings, config);
    const std::vector<Ranking> candidates =
        generic_candidates(inst, subsample, mode, config.seed);
    const WeightedRankingSet coreset = build_coreset(inst.rankings, config);
    const std::size_t winner = argmin_weighted(candidates, coreset);
    const Count exact_value = objective(inst, candidates[winner]);
    return {candidates[winner], exact_value};
}

} // namespace fairagg
