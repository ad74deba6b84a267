#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairagg/instance.hpp"
#include "fairagg/ranking.hpp"

namespace fairagg {

/// Pairwise vote table: counts(a, b) = number of input rankings placing a
/// before b. Kept in integer count units (the fractional weight would be
/// counts/n) so cut costs and objectives compare exactly.
class CountTournament {
public:
    CountTournament() = default;
    CountTournament(int d, Count n);

    int size() const { return d_; }
    Count total_rankings() const { return n_; }

    Count counts(int a, int b) const {
        return table_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(d_) +
                      static_cast<std::size_t>(b - 1)];
    }
    void set_counts(int a, int b, Count value) {
        table_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(d_) +
               static_cast<std::size_t>(b - 1)] = value;
    }
    void add_vote(int a, int b) {
        ++table_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(d_) +
                 static_cast<std::size_t>(b - 1)];
    }

private:
    int d_ = 0;
    Count n_ = 0;
    std::vector<Count> table_;
};

/// Orientation-only tournament: exactly one directed edge per candidate pair.
/// Deliberately a distinct type from CountTournament because majority votes
/// generally break the triangle constraint the bi-partition solver relies on.
class MajorityTournament {
public:
    MajorityTournament() = default;
    explicit MajorityTournament(int d)
        : d_(d), edge_(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {}

    int size() const { return d_; }
    bool has_edge(int from, int to) const {
        return edge_[static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(d_) +
                     static_cast<std::size_t>(to - 1)] != 0;
    }
    void orient(int from, int to) {
        edge_[static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(d_) +
              static_cast<std::size_t>(to - 1)] = 1;
        edge_[static_cast<std::size_t>(to - 1) * static_cast<std::size_t>(d_) +
              static_cast<std::size_t>(from - 1)] = 0;
    }

private:
    int d_ = 0;
    std::vector<char> edge_;
};

/// Tally every ordered pair over the input rankings.
CountTournament build_tournament(const std::vector<Ranking>& rankings);

/// build_tournament specialized to a single ranking: n = 1 and the weighted
/// in-degree of the candidate at position p is exactly p - 1.
CountTournament single_ranking_tournament(const Ranking& pi);

/// Orient each pair by the 2-of-3 majority of the given rankings.
MajorityTournament majority_tournament(const Ranking& t1, const Ranking& t2, const Ranking& t3);

/// Total votes against v: sum over u of counts(u, v), in count units.
Count weighted_in_degree(const CountTournament& t, int v);

std::vector<Count> all_in_degrees(const CountTournament& t);

/// Checks the vote-complement identity counts(a,b) + counts(b,a) = n for all
/// pairs and the triangle bound counts(a,b) <= counts(a,c) + counts(c,b) for
/// all triples; returns a description of the first violation, if any.
std::optional<std::string> validate(const CountTournament& t);

} // namespace fairagg
