#include "fairagg/bipartition.hpp"

#include <algorithm>
#include <string>

namespace fairagg {

std::vector<int> Bipartition::right() const {
    std::vector<char> in_left(static_cast<std::size_t>(universe_size) + 1, 0);
    for (int c : left) in_left[static_cast<std::size_t>(c)] = 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(universe_size) - left.size());
    for (int c = 1; c <= universe_size; ++c)
        if (!in_left[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

Count cut_cost(const CountTournament& t, const std::vector<int>& left) {
    const int d = t.size();
    std::vector<char> in_left(static_cast<std::size_t>(d) + 1, 0);
    for (int c : left) {
        if (c < 1 || c > d) throw invalid_input("cut_cost: candidate id out of range");
        in_left[static_cast<std::size_t>(c)] = 1;
    }
    Count cost = 0;
    for (int x : left)
        for (int y = 1; y <= d; ++y)
            if (!in_left[static_cast<std::size_t>(y)]) cost += t.counts(y, x);
    return cost;
}

Bipartition colorful_bipartition(const CountTournament& t, const GroupedUniverse& u,
                                 const FairnessSpec& spec) {
    if (t.size() != u.candidate_count())
        throw invalid_input("colorful_bipartition: tournament and universe sizes differ");
    spec.require_feasible(u);

    const int d = t.size();
    const int g = u.group_count();
    const std::int64_t k = spec.prefix_length();
    const std::vector<Count> degree = all_in_degrees(t);
    const auto degree_of = [&](int v) { return degree[static_cast<std::size_t>(v - 1)]; };
    const auto by_degree_then_id = [&](int a, int b) {
        return degree_of(a) != degree_of(b) ? degree_of(a) < degree_of(b) : a < b;
    };

    std::vector<char> chosen(static_cast<std::size_t>(d) + 1, 0);
    std::vector<std::int64_t> group_counts(static_cast<std::size_t>(g), 0);
    std::int64_t picked = 0;

    // Phase 1: seed each group with its lower quota, cheapest in-degrees first.
    std::vector<std::vector<int>> members(static_cast<std::size_t>(g));
    for (int c = 1; c <= d; ++c)
        members[static_cast<std::size_t>(u.group_of(c) - 1)].push_back(c);
    for (int i = 1; i <= g; ++i) {
        auto& group = members[static_cast<std::size_t>(i - 1)];
        std::stable_sort(group.begin(), group.end(), by_degree_then_id);
        const std::int64_t quota = spec.lower_quota(i);
        for (std::int64_t j = 0; j < quota; ++j) {
            const int v = group[static_cast<std::size_t>(j)];
            chosen[static_cast<std::size_t>(v)] = 1;
            ++group_counts[static_cast<std::size_t>(i - 1)];
            ++picked;
        }
    }

    // Phases 2-3: fill to k collectively, skipping groups at their upper quota.
    std::vector<int> remaining;
    remaining.reserve(static_cast<std::size_t>(d));
    for (int c = 1; c <= d; ++c)
        if (!chosen[static_cast<std::size_t>(c)]) remaining.push_back(c);
    std::stable_sort(remaining.begin(), remaining.end(), by_degree_then_id);
    for (int v : remaining) {
        if (picked >= k) break;
        const int grp = u.group_of(v);
        if (group_counts[static_cast<std::size_t>(grp - 1)] >= spec.upper_quota(grp)) continue;
        chosen[static_cast<std::size_t>(v)] = 1;
        ++group_counts[static_cast<std::size_t>(grp - 1)];
        ++picked;
    }
    if (picked != k)
        throw infeasible_spec("quota fill stalled before reaching k; spec infeasible");

    Bipartition result;
    result.universe_size = d;
    result.left.reserve(static_cast<std::size_t>(k));
    for (int c = 1; c <= d; ++c)
        if (chosen[static_cast<std::size_t>(c)]) result.left.push_back(c);
    return result;
}

namespace {

bool subset_is_colorful(const std::vector<int>& subset, const GroupedUniverse& u,
                        const FairnessSpec& spec) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(u.group_count()), 0);
    for (int c : subset) ++counts[static_cast<std::size_t>(u.group_of(c) - 1)];
    for (int i = 1; i <= u.group_count(); ++i) {
        const std::int64_t have = counts[static_cast<std::size_t>(i - 1)];
        if (have < spec.lower_quota(i) || have > spec.upper_quota(i)) return false;
    }
    return true;
}

std::int64_t choose_guarded(int n, int k, std::int64_t cap) {
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

} // namespace

std::pair<Bipartition, Count> bipartition_oracle(const CountTournament& t,
                                                 const GroupedUniverse& u,
                                                 const FairnessSpec& spec,
                                                 std::int64_t max_subsets) {
    if (t.size() != u.candidate_count())
        throw invalid_input("bipartition_oracle: tournament and universe sizes differ");
    const int d = t.size();
    const int k = spec.prefix_length();
    if (k > d) throw infeasible_spec("prefix length exceeds the universe");
    if (choose_guarded(d, k, max_subsets) > max_subsets)
        throw budget_exceeded("bipartition_oracle: too many k-subsets to enumerate");

    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;

    bool found = false;
    Count best_cost = 0;
    std::vector<int> best_subset;

    // Lexicographic k-subset enumeration; first strictly better wins, so the
    // reported argmin is the lexicographically smallest.
    while (true) {
        if (subset_is_colorful(subset, u, spec)) {
            const Count cost = cut_cost(t, subset);
            if (!found || cost < best_cost) {
                found = true;
                best_cost = cost;
                best_subset = subset;
            }
        }
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == d - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (!found) throw infeasible_spec("no quota-satisfying k-subset exists");
    Bipartition best;
    best.left = std::move(best_subset);
    best.universe_size = d;
    return {std::move(best), best_cost};
}

Count swap_cost_delta(const CountTournament& t, const std::vector<int>& left, int x, int y) {
    const int d = t.size();
    std::vector<char> in_left(static_cast<std::size_t>(d) + 1, 0);
    for (int c : left) {
        if (c < 1 || c > d) throw invalid_input("swap_cost_delta: candidate id out of range");
        in_left[static_cast<std::size_t>(c)] = 1;
    }
    if (x < 1 || x > d || !in_left[static_cast<std::size_t>(x)])
        throw invalid_input("swap_cost_delta: x must belong to L");
    if (y < 1 || y > d || in_left[static_cast<std::size_t>(y)])
        throw invalid_input("swap_cost_delta: y must lie outside L");

    std::vector<int> swapped;
    swapped.reserve(left.size());
    for (int c : left)
        if (c != x) swapped.push_back(c);
    swapped.push_back(y);
    return cut_cost(t, swapped) - cut_cost(t, left);
}

} // namespace fairagg
