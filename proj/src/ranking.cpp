#include "fairagg/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fairagg {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
    const int d = static_cast<int>(order_.size());
    positions_.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        const int c = order_[static_cast<std::size_t>(i)];
        if (c < 1 || c > d)
            throw invalid_input("candidate id " + std::to_string(c) + " outside 1.." + std::to_string(d));
        if (positions_[static_cast<std::size_t>(c)] != 0)
            throw invalid_input("candidate id " + std::to_string(c) + " repeated");
        positions_[static_cast<std::size_t>(c)] = i + 1;
    }
}

Ranking Ranking::identity(int d) {
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 1);
    return Ranking(std::move(order));
}

Ranking Ranking::reversed() const {
    std::vector<int> order(order_.rbegin(), order_.rend());
    return Ranking(std::move(order));
}

namespace {

Count merge_count(std::vector<int>& values, std::vector<int>& scratch,
                  std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    Count inv = merge_count(values, scratch, lo, mid) + merge_count(values, scratch, mid, hi);

    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (values[i] <= values[j]) {
            scratch[out++] = values[i++];
        } else {
            inv += static_cast<Count>(mid - i); // everything left in [i, mid) beats values[j]
            scratch[out++] = values[j++];
        }
    }
    while (i < mid) scratch[out++] = values[i++];
    while (j < hi) scratch[out++] = values[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              values.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

} // namespace

Count count_inversions(std::vector<int> values) {
    std::vector<int> scratch(values.size());
    return merge_count(values, scratch, 0, values.size());
}

Count kendall_tau(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size())
        throw invalid_input("kendall_tau: rankings over different universes");
    // Walk a top-to-bottom, replace each candidate by its rank in b; a pair
    // disagrees exactly when that sequence has an inversion.
    std::vector<int> relabeled(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i)
        relabeled[static_cast<std::size_t>(i - 1)] = b.position(a.at(i));
    return count_inversions(std::move(relabeled));
}

namespace {

std::vector<char> member_mask(const std::vector<int>& ids, int d, const char* where) {
    std::vector<char> mask(static_cast<std::size_t>(d) + 1, 0);
    for (int c : ids) {
        if (c < 1 || c > d)
            throw invalid_input(std::string(where) + ": candidate id " + std::to_string(c) +
                                " outside 1.." + std::to_string(d));
        mask[static_cast<std::size_t>(c)] = 1;
    }
    return mask;
}

} // namespace

Count kendall_tau_blocks(const Ranking& a, const Ranking& b,
                         const std::vector<int>& block_x, const std::vector<int>& block_y) {
    if (a.size() != b.size())
        throw invalid_input("kendall_tau_blocks: rankings over different universes");
    const int d = a.size();
    const std::vector<char> in_x = member_mask(block_x, d, "kendall_tau_blocks");
    const std::vector<char> in_y = member_mask(block_y, d, "kendall_tau_blocks");

    Count disagreements = 0;
    for (int u = 1; u <= d; ++u) {
        for (int v = u + 1; v <= d; ++v) {
            const bool covered = (in_x[static_cast<std::size_t>(u)] && in_y[static_cast<std::size_t>(v)]) ||
                                 (in_x[static_cast<std::size_t>(v)] && in_y[static_cast<std::size_t>(u)]);
            if (!covered) continue;
            if (a.prefers(u, v) != b.prefers(u, v)) ++disagreements;
        }
    }
    return disagreements;
}

std::vector<int> restrict_to(const Ranking& pi, const std::vector<int>& keep) {
    const std::vector<char> mask = member_mask(keep, pi.size(), "restrict_to");
    std::vector<int> out;
    out.reserve(keep.size());
    for (int c : pi.order())
        if (mask[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

Ranking concat(const std::vector<int>& top, const std::vector<int>& bottom) {
    std::vector<int> order;
    order.reserve(top.size() + bottom.size());
    order.insert(order.end(), top.begin(), top.end());
    order.insert(order.end(), bottom.begin(), bottom.end());
    try {
        return Ranking(std::move(order));
    } catch (const invalid_input& e) {
        throw invalid_input(std::string("concat: blocks do not partition the universe (") + e.what() + ")");
    }
}

} // namespace fairagg
