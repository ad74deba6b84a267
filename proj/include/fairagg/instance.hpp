#pragma once

#include <vector>

#include "fairagg/ranking.hpp"
#include "fairagg/rational.hpp"

namespace fairagg {

/// Partition of candidates 1..d into groups 1..g.
class GroupedUniverse {
public:
    GroupedUniverse() = default;

    // group_of[c - 1] is the group of candidate c; every entry must be in 1..g.
    GroupedUniverse(int d, int g, std::vector<int> group_of);

    int candidate_count() const { return d_; }
    int group_count() const { return g_; }
    int group_of(int candidate) const { return group_of_[static_cast<std::size_t>(candidate - 1)]; }
    int group_size(int group) const { return group_sizes_[static_cast<std::size_t>(group - 1)]; }
    const std::vector<int>& assignments() const { return group_of_; }

    friend bool operator==(const GroupedUniverse&, const GroupedUniverse&) = default;

private:
    int d_ = 0;
    int g_ = 0;
    std::vector<int> group_of_;
    std::vector<int> group_sizes_;
};

/// Per-group prefix quotas: group i must hold between floor(alpha_i * k) and
/// ceil(beta_i * k) of the top-k positions. Bounds are exact rationals so the
/// floors and ceilings never suffer float rounding.
class FairnessSpec {
public:
    FairnessSpec() = default;

    FairnessSpec(std::vector<Rational> alphas, std::vector<Rational> betas, int k);

    int group_count() const { return static_cast<int>(alphas_.size()); }
    int prefix_length() const { return k_; }
    const Rational& alpha(int group) const { return alphas_[static_cast<std::size_t>(group - 1)]; }
    const Rational& beta(int group) const { return betas_[static_cast<std::size_t>(group - 1)]; }

    std::int64_t lower_quota(int group) const { return floor_scaled(alpha(group), k_); }
    std::int64_t upper_quota(int group) const { return ceil_scaled(beta(group), k_); }

    // Throws infeasible_spec unless some size-k prefix can satisfy every quota.
    void require_feasible(const GroupedUniverse& u) const;
    bool feasible_for(const GroupedUniverse& u) const;

    friend bool operator==(const FairnessSpec&, const FairnessSpec&) = default;

private:
    std::vector<Rational> alphas_;
    std::vector<Rational> betas_;
    int k_ = 0;
};

/// One aggregation problem: the universe, the fairness quotas, and the voters'
/// rankings. Construction validates dimensions and quota feasibility.
struct Instance {
    GroupedUniverse universe;
    FairnessSpec spec;
    std::vector<Ranking> rankings;

    Instance() = default;
    Instance(GroupedUniverse u, FairnessSpec s, std::vector<Ranking> r);

    int candidate_count() const { return universe.candidate_count(); }
    int ranking_count() const { return static_cast<int>(rankings.size()); }
};

/// Rankings with positive weights; stands in for the full input set when the
/// randomized variant evaluates candidates against a compressed sample.
struct WeightedRankingSet {
    std::vector<std::pair<Ranking, Rational>> items;

    WeightedRankingSet() = default;
    explicit WeightedRankingSet(std::vector<std::pair<Ranking, Rational>> weighted);
};

/// True iff every group's top-k count lies within its quota.
bool is_fair(const Ranking& pi, const GroupedUniverse& u, const FairnessSpec& spec);

// Per-group counts among the top-k positions of pi, indexed by group - 1.
std::vector<int> prefix_group_counts(const Ranking& pi, const GroupedUniverse& u, int k);

/// Sum of Kendall tau distances from sigma to every ranking in the set.
Count objective(const std::vector<Ranking>& rankings, const Ranking& sigma);
Count objective(const Instance& inst, const Ranking& sigma);

Rational weighted_objective(const WeightedRankingSet& set, const Ranking& sigma);

} // namespace fairagg
