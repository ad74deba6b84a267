#include "fairagg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairagg/aggregate.hpp"
#include "fairagg/bipartition.hpp"
#include "fairagg/rng.hpp"
#include "fairagg/tournament.hpp"

namespace fairagg {

namespace {

// Candidate ids on the tight family: A = 1..s, B = s+1..2s, C = 2s+1..2s+t,
// D = 2s+t+1..2s+2t.
struct TightIds {
    std::int64_t s, t;
    int a(std::int64_t i) const { return static_cast<int>(i); }
    int b(std::int64_t i) const { return static_cast<int>(s + i); }
    int c(std::int64_t i) const { return static_cast<int>(2 * s + i); }
    int dd(std::int64_t i) const { return static_cast<int>(2 * s + t + i); }
};

void append_range(std::vector<int>& out, std::int64_t from, std::int64_t to,
                  int (TightIds::*member)(std::int64_t) const, const TightIds& ids) {
    for (std::int64_t i = from; i <= to; ++i) out.push_back((ids.*member)(i));
}

} // namespace

Instance gen_tight(const TightParams& p) {
    if (p.s < 1 || p.t < 1) throw invalid_input("tight family needs s >= 1 and t >= 1");
    const TightIds ids{p.s, p.t};
    const std::int64_t d = p.candidate_count();

    std::vector<Ranking> rankings;
    rankings.reserve(static_cast<std::size_t>(d));

    // Majority ranking (C, A, B, D), d - 2s + 1 copies.
    std::vector<int> majority;
    append_range(majority, 1, p.t, &TightIds::c, ids);
    append_range(majority, 1, p.s, &TightIds::a, ids);
    append_range(majority, 1, p.s, &TightIds::b, ids);
    append_range(majority, 1, p.t, &TightIds::dd, ids);
    const Ranking majority_ranking{majority};
    for (std::int64_t copy = 0; copy < d - 2 * p.s + 1; ++copy)
        rankings.push_back(majority_ranking);

    // The lone dissenter (B, C, D, A).
    std::vector<int> dissenter;
    append_range(dissenter, 1, p.s, &TightIds::b, ids);
    append_range(dissenter, 1, p.t, &TightIds::c, ids);
    append_range(dissenter, 1, p.t, &TightIds::dd, ids);
    append_range(dissenter, 1, p.s, &TightIds::a, ids);
    rankings.emplace_back(std::move(dissenter));

    // Iterated rotations, two copies each: after step i the last i elements of
    // B lead and the first i elements of A trail.
    for (std::int64_t step = 1; step <= p.s - 1; ++step) {
        std::vector<int> rotated;
        append_range(rotated, p.s - step + 1, p.s, &TightIds::b, ids);
        append_range(rotated, 1, p.t, &TightIds::c, ids);
        append_range(rotated, step + 1, p.s, &TightIds::a, ids);
        append_range(rotated, 1, p.s - step, &TightIds::b, ids);
        append_range(rotated, 1, p.t, &TightIds::dd, ids);
        append_range(rotated, 1, step, &TightIds::a, ids);
        const Ranking r{rotated};
        rankings.push_back(r);
        rankings.push_back(r);
    }

    std::vector<int> group_of(static_cast<std::size_t>(d), 0);
    for (std::int64_t i = 1; i <= p.s; ++i) {
        group_of[static_cast<std::size_t>(ids.a(i) - 1)] = 2;
        group_of[static_cast<std::size_t>(ids.b(i) - 1)] = 2;
    }
    for (std::int64_t i = 1; i <= p.t; ++i) {
        group_of[static_cast<std::size_t>(ids.c(i) - 1)] = 1;
        group_of[static_cast<std::size_t>(ids.dd(i) - 1)] = 1;
    }
    GroupedUniverse universe(static_cast<int>(d), 2, std::move(group_of));

    const Rational denom(p.s + p.t);
    FairnessSpec spec({Rational(p.t) / denom, Rational(p.s) / denom}, {Rational(1), Rational(1)},
                      static_cast<int>(d / 2));
    return Instance(std::move(universe), std::move(spec), std::move(rankings));
}

std::pair<Count, Count> tight_closed_forms(const TightParams& p) {
    if (p.s < 1 || p.t < 1) throw invalid_input("tight family needs s >= 1 and t >= 1");
    const std::int64_t d = p.candidate_count();
    const Count optimal = d * p.s * p.s - p.s;
    const Count pipeline = 2 * d * p.s * p.s - (8 * p.s * p.s * p.s + p.s) / 3;
    return {optimal, pipeline};
}

Ranking tight_optimal_ranking(const TightParams& p) {
    const TightIds ids{p.s, p.t};
    std::vector<int> order;
    append_range(order, 1, p.t, &TightIds::c, ids);
    append_range(order, 1, p.s, &TightIds::a, ids);
    append_range(order, 1, p.s, &TightIds::b, ids);
    append_range(order, 1, p.t, &TightIds::dd, ids);
    return Ranking(std::move(order));
}

Ranking tight_pipeline_ranking(const TightParams& p) {
    const TightIds ids{p.s, p.t};
    std::vector<int> order;
    append_range(order, 1, p.t, &TightIds::c, ids);
    append_range(order, 1, p.s, &TightIds::b, ids);
    append_range(order, 1, p.s, &TightIds::a, ids);
    append_range(order, 1, p.t, &TightIds::dd, ids);
    return Ranking(std::move(order));
}

Instance gen_random(int n, int d, int g, int k, RandomModel model, std::uint64_t seed,
                    int planted_swaps) {
    if (n < 1 || d < 1 || g < 1 || k < 1 || k > d)
        throw invalid_input("gen_random: need n,d,g,k >= 1 and k <= d");

    std::vector<int> group_of(static_cast<std::size_t>(d));
    for (int c = 1; c <= d; ++c) group_of[static_cast<std::size_t>(c - 1)] = (c - 1) % g + 1;
    GroupedUniverse universe(d, g, std::move(group_of));

    std::vector<Rational> proportions;
    proportions.reserve(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i)
        proportions.emplace_back(universe.group_size(i), d);
    FairnessSpec spec(proportions, proportions, k);

    std::mt19937_64 rng = make_rng(seed);
    std::vector<Ranking> rankings;
    rankings.reserve(static_cast<std::size_t>(n));

    if (model == RandomModel::uniform) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> order(static_cast<std::size_t>(d));
            std::iota(order.begin(), order.end(), 1);
            shuffle_vec(order, rng);
            rankings.emplace_back(std::move(order));
        }
    } else {
        std::vector<int> center(static_cast<std::size_t>(d));
        std::iota(center.begin(), center.end(), 1);
        for (int i = 0; i < n; ++i) {
            std::vector<int> order = center;
            for (int swap = 0; swap < planted_swaps && d > 1; ++swap) {
                const std::size_t pos =
                    static_cast<std::size_t>(bounded(rng, static_cast<std::uint64_t>(d - 1)));
                std::swap(order[pos], order[pos + 1]);
            }
            rankings.emplace_back(std::move(order));
        }
    }
    return Instance(std::move(universe), std::move(spec), std::move(rankings));
}

std::pair<Ranking, Count> exact_fair_opt(const Instance& inst) {
    const int d = inst.candidate_count();
    const int k = inst.spec.prefix_length();
    const int larger_block = std::max(k, d - k);
    double subsets = 1.0;
    for (int i = 1; i <= k; ++i) subsets = subsets * (d - k + i) / i;
    const double work = subsets * std::pow(2.0, larger_block) * larger_block * larger_block;
    if (larger_block > 15 || work > 2e9)
        throw budget_exceeded("exact_fair_opt: instance too large for the subset oracle");

    const CountTournament t = build_tournament(inst.rankings);

    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;

    bool found = false;
    Count best_value = 0;
    Ranking best;

    while (true) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(inst.universe.group_count()), 0);
        for (int c : subset) ++counts[static_cast<std::size_t>(inst.universe.group_of(c) - 1)];
        bool colorful = true;
        for (int i = 1; i <= inst.universe.group_count() && colorful; ++i) {
            const std::int64_t have = counts[static_cast<std::size_t>(i - 1)];
            colorful = have >= inst.spec.lower_quota(i) && have <= inst.spec.upper_quota(i);
        }
        if (colorful) {
            const Count cross = cut_cost(t, subset);
            if (!found || cross < best_value) { // cheap lower bound before the block DPs
                std::vector<int> complement;
                complement.reserve(static_cast<std::size_t>(d - k));
                std::vector<char> in_subset(static_cast<std::size_t>(d) + 1, 0);
                for (int c : subset) in_subset[static_cast<std::size_t>(c)] = 1;
                for (int c = 1; c <= d; ++c)
                    if (!in_subset[static_cast<std::size_t>(c)]) complement.push_back(c);

                std::vector<std::vector<int>> top_block, bottom_block;
                top_block.reserve(inst.rankings.size());
                bottom_block.reserve(inst.rankings.size());
                for (const Ranking& pi : inst.rankings) {
                    top_block.push_back(restrict_to(pi, subset));
                    bottom_block.push_back(restrict_to(pi, complement));
                }
                auto [top_order, top_cost] =
                    subset.empty() ? std::pair<std::vector<int>, Count>{{}, 0}
                                   : exact_aggregate(top_block);
                auto [bottom_order, bottom_cost] =
                    complement.empty() ? std::pair<std::vector<int>, Count>{{}, 0}
                                       : exact_aggregate(bottom_block);
                const Count total = cross + top_cost + bottom_cost;
                if (!found || total < best_value) {
                    found = true;
                    best_value = total;
                    best = concat(top_order, bottom_order);
                }
            }
        }
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == d - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (!found) throw infeasible_spec("exact_fair_opt: no quota-satisfying prefix set");
    return {std::move(best), best_value};
}

std::pair<Ranking, Count> exact_fair_opt_enumerated(const Instance& inst) {
    const int d = inst.candidate_count();
    if (d > 8) throw budget_exceeded("exact_fair_opt_enumerated: d must stay at most 8");

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 1);

    bool found = false;
    Count best_value = 0;
    Ranking best;
    do {
        Ranking sigma(order);
        if (!is_fair(sigma, inst.universe, inst.spec)) continue;
        const Count value = objective(inst, sigma);
        if (!found || value < best_value) {
            found = true;
            best_value = value;
            best = std::move(sigma);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!found) throw infeasible_spec("exact_fair_opt_enumerated: no fair ranking exists");
    return {std::move(best), best_value};
}

AnalysisContext build_analysis(const Instance& inst, const Ranking& sigma_star) {
    if (sigma_star.size() != inst.candidate_count())
        throw invalid_input("build_analysis: reference ranking size mismatch");
    AnalysisContext ctx;
    ctx.sigma_star = sigma_star;
    ctx.inversion_sets.reserve(inst.rankings.size());
    const int d = inst.candidate_count();
    for (const Ranking& pi : inst.rankings) {
        std::vector<std::pair<int, int>> inverted;
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b)
                if (a != b && pi.prefers(a, b) && sigma_star.prefers(b, a))
                    inverted.emplace_back(a, b);
        std::sort(inverted.begin(), inverted.end());
        ctx.inversion_sets.push_back(std::move(inverted));
    }
    return ctx;
}

std::vector<std::pair<int, int>> pair_intersection(const std::vector<std::pair<int, int>>& a,
                                                   const std::vector<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::pair<int, int>> pair_union(const std::vector<std::pair<int, int>>& a,
                                            const std::vector<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace fairagg
