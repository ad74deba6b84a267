#include "fairagg/instance.hpp"

#include <algorithm>
#include <string>

namespace fairagg {

GroupedUniverse::GroupedUniverse(int d, int g, std::vector<int> group_of)
    : d_(d), g_(g), group_of_(std::move(group_of)) {
    if (d_ < 1) throw invalid_input("universe needs at least one candidate");
    if (g_ < 1) throw invalid_input("universe needs at least one group");
    if (static_cast<int>(group_of_.size()) != d_)
        throw invalid_input("group assignment covers " + std::to_string(group_of_.size()) +
                            " candidates, expected " + std::to_string(d_));
    group_sizes_.assign(static_cast<std::size_t>(g_), 0);
    for (int c = 1; c <= d_; ++c) {
        const int grp = group_of_[static_cast<std::size_t>(c - 1)];
        if (grp < 1 || grp > g_)
            throw invalid_input("candidate " + std::to_string(c) + " assigned to group " +
                                std::to_string(grp) + " outside 1.." + std::to_string(g_));
        ++group_sizes_[static_cast<std::size_t>(grp - 1)];
    }
}

FairnessSpec::FairnessSpec(std::vector<Rational> alphas, std::vector<Rational> betas, int k)
    : alphas_(std::move(alphas)), betas_(std::move(betas)), k_(k) {
    if (alphas_.empty() || alphas_.size() != betas_.size())
        throw invalid_input("fairness spec needs matching alpha/beta vectors");
    if (k_ < 1) throw invalid_input("prefix length k must be at least 1");
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        const Rational& a = alphas_[i];
        const Rational& b = betas_[i];
        if (a < 0 || b > 1 || a > b)
            throw invalid_input("group " + std::to_string(i + 1) +
                                " needs 0 <= alpha <= beta <= 1");
    }
}

bool FairnessSpec::feasible_for(const GroupedUniverse& u) const {
    if (u.group_count() != group_count() || k_ > u.candidate_count()) return false;
    std::int64_t lower_total = 0;
    std::int64_t upper_total = 0;
    for (int i = 1; i <= group_count(); ++i) {
        const std::int64_t lo = lower_quota(i);
        if (lo > u.group_size(i)) return false;
        lower_total += lo;
        upper_total += std::min<std::int64_t>(upper_quota(i), u.group_size(i));
    }
    return lower_total <= k_ && k_ <= upper_total;
}

void FairnessSpec::require_feasible(const GroupedUniverse& u) const {
    if (u.group_count() != group_count())
        throw invalid_input("fairness spec has " + std::to_string(group_count()) +
                            " groups, universe has " + std::to_string(u.group_count()));
    if (k_ > u.candidate_count())
        throw invalid_input("prefix length k exceeds the candidate count");
    if (!feasible_for(u))
        throw infeasible_spec("no size-" + std::to_string(k_) +
                              " prefix can satisfy the group quotas");
}

Instance::Instance(GroupedUniverse u, FairnessSpec s, std::vector<Ranking> r)
    : universe(std::move(u)), spec(std::move(s)), rankings(std::move(r)) {
    if (rankings.empty()) throw invalid_input("instance needs at least one ranking");
    for (const Ranking& pi : rankings)
        if (pi.size() != universe.candidate_count())
            throw invalid_input("ranking size does not match the universe");
    spec.require_feasible(universe);
}

WeightedRankingSet::WeightedRankingSet(std::vector<std::pair<Ranking, Rational>> weighted)
    : items(std::move(weighted)) {
    if (items.empty()) throw invalid_input("weighted set needs at least one ranking");
    const int d = items.front().first.size();
    for (const auto& [pi, w] : items) {
        if (pi.size() != d) throw invalid_input("weighted set mixes universes");
        if (w <= 0) throw invalid_input("weights must be strictly positive");
    }
}

std::vector<int> prefix_group_counts(const Ranking& pi, const GroupedUniverse& u, int k) {
    std::vector<int> counts(static_cast<std::size_t>(u.group_count()), 0);
    for (int rank = 1; rank <= k; ++rank)
        ++counts[static_cast<std::size_t>(u.group_of(pi.at(rank)) - 1)];
    return counts;
}

bool is_fair(const Ranking& pi, const GroupedUniverse& u, const FairnessSpec& spec) {
    const std::vector<int> counts = prefix_group_counts(pi, u, spec.prefix_length());
    for (int i = 1; i <= u.group_count(); ++i) {
        const int have = counts[static_cast<std::size_t>(i - 1)];
        if (have < spec.lower_quota(i) || have > spec.upper_quota(i)) return false;
    }
    return true;
}

Count objective(const std::vector<Ranking>& rankings, const Ranking& sigma) {
    Count total = 0;
    for (const Ranking& pi : rankings) total += kendall_tau(pi, sigma);
    return total;
}

Count objective(const Instance& inst, const Ranking& sigma) {
    return objective(inst.rankings, sigma);
}

Rational weighted_objective(const WeightedRankingSet& set, const Ranking& sigma) {
    Rational total = 0;
    for (const auto& [pi, w] : set.items) total += w * kendall_tau(pi, sigma);
    return total;
}

} // namespace fairagg
