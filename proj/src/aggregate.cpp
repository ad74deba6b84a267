#include "fairagg/aggregate.hpp"

#include <algorithm>
#include <string>

#include "fairagg/bipartition.hpp"
#include "fairagg/closest_fair.hpp"
#include "fairagg/rng.hpp"
#include "fairagg/tournament.hpp"

namespace fairagg {

namespace {

// Pairwise votes over a block's shared element set, relabeled to 0..m-1 in
// ascending id order (so "smallest id" tie-breaks are just smallest index).
struct BlockVotes {
    std::vector<int> ids; // sorted; local index -> candidate id
    std::vector<Count> table;

    int size() const { return static_cast<int>(ids.size()); }
    Count votes(int a_local, int b_local) const {
        return table[static_cast<std::size_t>(a_local) * ids.size() +
                     static_cast<std::size_t>(b_local)];
    }
};

BlockVotes tally_block(const std::vector<std::vector<int>>& block_rankings) {
    if (block_rankings.empty()) throw invalid_input("block aggregation: empty ranking set");
    BlockVotes block;
    block.ids = block_rankings.front();
    std::sort(block.ids.begin(), block.ids.end());
    if (std::adjacent_find(block.ids.begin(), block.ids.end()) != block.ids.end())
        throw invalid_input("block aggregation: repeated element");
    const std::size_t m = block.ids.size();
    block.table.assign(m * m, 0);

    std::vector<int> local_of; // id -> local index
    const int max_id = block.ids.empty() ? 0 : block.ids.back();
    local_of.assign(static_cast<std::size_t>(max_id) + 1, -1);
    for (std::size_t i = 0; i < m; ++i)
        local_of[static_cast<std::size_t>(block.ids[i])] = static_cast<int>(i);

    for (const std::vector<int>& pi : block_rankings) {
        if (pi.size() != m) throw invalid_input("block aggregation: mixed element sets");
        for (std::size_t i = 0; i < m; ++i) {
            const int a = pi[i];
            if (a < 1 || a > max_id || local_of[static_cast<std::size_t>(a)] < 0)
                throw invalid_input("block aggregation: mixed element sets");
            for (std::size_t j = i + 1; j < m; ++j) {
                const int b = pi[j];
                if (b < 1 || b > max_id || local_of[static_cast<std::size_t>(b)] < 0)
                    throw invalid_input("block aggregation: mixed element sets");
                ++block.table[static_cast<std::size_t>(local_of[static_cast<std::size_t>(a)]) * m +
                              static_cast<std::size_t>(local_of[static_cast<std::size_t>(b)])];
            }
        }
    }
    return block;
}

void kwiksort_segment(const BlockVotes& block, std::vector<int>& segment,
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
        if (block.votes(v, pivot) > block.votes(pivot, v))
            left.push_back(v);
        else
            right.push_back(v); // ties go right
    }
    kwiksort_segment(block, left, rng, out);
    out.push_back(pivot);
    kwiksort_segment(block, right, rng, out);
}

} // namespace

std::vector<int> kwiksort(const std::vector<std::vector<int>>& block_rankings,
                          std::uint64_t seed) {
    const BlockVotes block = tally_block(block_rankings);
    std::vector<int> all(static_cast<std::size_t>(block.size()));
    for (int i = 0; i < block.size(); ++i) all[static_cast<std::size_t>(i)] = i;

    std::mt19937_64 rng = make_rng(seed);
    std::vector<int> ordered_local;
    ordered_local.reserve(all.size());
    kwiksort_segment(block, all, rng, ordered_local);

    std::vector<int> ordered_ids;
    ordered_ids.reserve(all.size());
    for (int local : ordered_local)
        ordered_ids.push_back(block.ids[static_cast<std::size_t>(local)]);
    return ordered_ids;
}

std::pair<std::vector<int>, Count> exact_aggregate(
    const std::vector<std::vector<int>>& block_rankings, int dp_cap) {
    const BlockVotes block = tally_block(block_rankings);
    const int m = block.size();
    if (m > dp_cap || m > 22)
        throw budget_exceeded("exact_aggregate: block of " + std::to_string(m) +
                              " exceeds the DP cap of " + std::to_string(std::min(dp_cap, 22)));
    if (m == 0) return {{}, 0};

    const std::uint32_t full = (1u << m) - 1u;
    constexpr Count kUnset = -1;
    std::vector<Count> best(static_cast<std::size_t>(full) + 1, kUnset);
    std::vector<int> first_pick(static_cast<std::size_t>(full) + 1, -1);
    best[0] = 0;

    // best[mask] = optimal cost of ranking the elements of `mask` as a
    // contiguous tail; first_pick[mask] is the element placed first among them.
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Count best_cost = kUnset;
        int best_v = -1;
        for (int v = 0; v < m; ++v) {
            if (!(mask & (1u << v))) continue;
            const std::uint32_t rest = mask & ~(1u << v);
            Count cost = best[rest];
            for (int u = 0; u < m; ++u)
                if (rest & (1u << u)) cost += block.votes(u, v); // votes against v leading
            if (best_cost == kUnset || cost < best_cost) {
                best_cost = cost;
                best_v = v;
            }
        }
        best[mask] = best_cost;
        first_pick[mask] = best_v;
    }

    std::vector<int> ordered_ids;
    ordered_ids.reserve(static_cast<std::size_t>(m));
    std::uint32_t mask = full;
    while (mask) {
        const int v = first_pick[mask];
        ordered_ids.push_back(block.ids[static_cast<std::size_t>(v)]);
        mask &= ~(1u << v);
    }
    return {std::move(ordered_ids), best[full]};
}

namespace {

std::vector<std::vector<int>> restrict_all(const std::vector<Ranking>& rankings,
                                           const std::vector<int>& keep) {
    std::vector<std::vector<int>> out;
    out.reserve(rankings.size());
    for (const Ranking& pi : rankings) out.push_back(restrict_to(pi, keep));
    return out;
}

std::vector<int> aggregate_block(const std::vector<std::vector<int>>& block_rankings,
                                 const AggregatorChoice& inner, std::uint64_t block_salt) {
    if (block_rankings.front().empty()) return {};
    if (inner.kind == AggregatorChoice::Kind::kwiksort)
        return kwiksort(block_rankings, derive_seed(inner.seed, block_salt));
    return exact_aggregate(block_rankings, inner.dp_cap).first;
}

} // namespace

std::pair<Ranking, Count> fair_aggregate(const Instance& inst, const AggregatorChoice& inner) {
    const CountTournament t = build_tournament(inst.rankings);
    const Bipartition split = colorful_bipartition(t, inst.universe, inst.spec);
    const std::vector<int> right = split.right();

    const std::vector<int> top = aggregate_block(restrict_all(inst.rankings, split.left), inner, 1);
    const std::vector<int> bottom = aggregate_block(restrict_all(inst.rankings, right), inner, 2);

    Ranking result = concat(top, bottom);
    const Count value = objective(inst, result);
    return {std::move(result), value};
}

std::pair<Ranking, Count> best_from_input(const Instance& inst) {
    bool found = false;
    Ranking best;
    Count best_value = 0;
    for (const Ranking& pi : inst.rankings) {
        auto [sigma, dist] = closest_fair_ranking(pi, inst.universe, inst.spec);
        const Count value = objective(inst, sigma);
        if (!found || value < best_value) {
            found = true;
            best = std::move(sigma);
            best_value = value;
        }
    }
    return {std::move(best), best_value};
}

} // namespace fairagg
