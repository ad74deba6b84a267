#pragma once

#include <cstdint>
#include <vector>

#include "fairagg/errors.hpp"

namespace fairagg {

using Count = std::int64_t;

/// A total order over candidates 1..d, best candidate first. Immutable after
/// construction; keeps the inverse map so position lookups are O(1).
class Ranking {
public:
    Ranking() = default;

    // Throws invalid_input unless `order` is a permutation of {1..d}.
    explicit Ranking(std::vector<int> order);

    static Ranking identity(int d);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    // 1-based rank of a candidate; position(order()[i-1]) == i.
    int position(int candidate) const { return positions_[static_cast<std::size_t>(candidate)]; }

    bool prefers(int a, int b) const { return position(a) < position(b); }

    int at(int rank) const { return order_[static_cast<std::size_t>(rank - 1)]; }

    Ranking reversed() const;

    friend bool operator==(const Ranking&, const Ranking&) = default;
    friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.order_ <=> b.order_; }

private:
    std::vector<int> order_;
    std::vector<int> positions_; // indexed by candidate id, entry 0 unused
};

/// Number of candidate pairs the two rankings order oppositely.
/// O(d log d) by counting inversions of one ranking relabeled through the other.
Count kendall_tau(const Ranking& a, const Ranking& b);

/// Disagreeing pairs restricted to the blocks X and Y: an unordered pair is
/// counted once when one endpoint lies in X and the other in Y (either way
/// around), so for disjoint X, Y this is the cross term of the block
/// decomposition and for X == Y the within-block term.
Count kendall_tau_blocks(const Ranking& a, const Ranking& b,
                         const std::vector<int>& block_x, const std::vector<int>& block_y);

/// Subsequence of pi keeping only the candidates in `keep`, order preserved.
std::vector<int> restrict_to(const Ranking& pi, const std::vector<int>& keep);

/// Full ranking with every candidate of `top` ahead of every candidate of
/// `bottom`; the two must partition {1..d}.
Ranking concat(const std::vector<int>& top, const std::vector<int>& bottom);

// Inversion count of an integer sequence (merge sort). Exposed because block
// aggregation reuses it on relabeled subsequences.
Count count_inversions(std::vector<int> values);

} // namespace fairagg
