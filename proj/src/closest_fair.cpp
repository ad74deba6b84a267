#include "fairagg/closest_fair.hpp"

#include <algorithm>

#include "fairagg/bipartition.hpp"
#include "fairagg/tournament.hpp"

namespace fairagg {

std::pair<Ranking, Count> closest_fair_ranking(const Ranking& pi, const GroupedUniverse& u,
                                               const FairnessSpec& spec) {
    if (pi.size() != u.candidate_count())
        throw invalid_input("closest_fair_ranking: ranking and universe sizes differ");
    const CountTournament t = single_ranking_tournament(pi);
    const Bipartition split = colorful_bipartition(t, u, spec);
    const Count dist = cut_cost(t, split.left);
    Ranking sigma = concat(restrict_to(pi, split.left), restrict_to(pi, split.right()));
    return {std::move(sigma), dist};
}

namespace {

std::pair<Ranking, Count> enumerate_permutations(const Ranking& pi, const GroupedUniverse& u,
                                                 const FairnessSpec& spec) {
    const int d = u.candidate_count();
    std::vector<int> order(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i + 1;

    bool found = false;
    Count best_dist = 0;
    Ranking best;
    do {
        Ranking sigma(order);
        if (!is_fair(sigma, u, spec)) continue;
        const Count dist = kendall_tau(pi, sigma);
        if (!found || dist < best_dist) {
            found = true;
            best_dist = dist;
            best = std::move(sigma);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!found) throw infeasible_spec("no fair ranking exists for this spec");
    return {std::move(best), best_dist};
}

std::pair<Ranking, Count> enumerate_prefix_sets(const Ranking& pi, const GroupedUniverse& u,
                                                const FairnessSpec& spec,
                                                std::int64_t max_subsets) {
    const CountTournament t = single_ranking_tournament(pi);
    const auto [split, cost] = bipartition_oracle(t, u, spec, max_subsets);
    Ranking sigma = concat(restrict_to(pi, split.left), restrict_to(pi, split.right()));
    return {std::move(sigma), cost};
}

} // namespace

std::pair<Ranking, Count> closest_fair_oracle(const Ranking& pi, const GroupedUniverse& u,
                                              const FairnessSpec& spec) {
    if (pi.size() != u.candidate_count())
        throw invalid_input("closest_fair_oracle: ranking and universe sizes differ");
    const bool permutations_feasible = u.candidate_count() <= 8;

    std::pair<Ranking, Count> by_subsets;
    bool have_subsets = false;
    try {
        by_subsets = enumerate_prefix_sets(pi, u, spec, 10'000'000);
        have_subsets = true;
    } catch (const budget_exceeded&) {
        if (!permutations_feasible) throw;
    }

    if (permutations_feasible) {
        auto by_permutations = enumerate_permutations(pi, u, spec);
        if (have_subsets && by_subsets.second != by_permutations.second)
            throw std::logic_error("closest_fair_oracle: enumeration modes disagree");
        return by_permutations;
    }
    return by_subsets;
}

} // namespace fairagg
