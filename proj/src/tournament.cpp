#include "fairagg/tournament.hpp"

namespace fairagg {

CountTournament::CountTournament(int d, Count n)
    : d_(d), n_(n), table_(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {
    if (d < 1) throw invalid_input("tournament needs at least one vertex");
    if (n < 1) throw invalid_input("tournament needs at least one ranking");
}

CountTournament build_tournament(const std::vector<Ranking>& rankings) {
    if (rankings.empty()) throw invalid_input("build_tournament: empty ranking set");
    const int d = rankings.front().size();
    for (const Ranking& pi : rankings)
        if (pi.size() != d) throw invalid_input("build_tournament: mixed universes");

    CountTournament t(d, static_cast<Count>(rankings.size()));
    for (const Ranking& pi : rankings) {
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                t.add_vote(pi.at(i), pi.at(j));
    }
    return t;
}

CountTournament single_ranking_tournament(const Ranking& pi) {
    return build_tournament({pi});
}

MajorityTournament majority_tournament(const Ranking& t1, const Ranking& t2, const Ranking& t3) {
    const int d = t1.size();
    if (t2.size() != d || t3.size() != d)
        throw invalid_input("majority_tournament: mixed universes");
    MajorityTournament g(d);
    for (int a = 1; a <= d; ++a) {
        for (int b = a + 1; b <= d; ++b) {
            const int votes = (t1.prefers(a, b) ? 1 : 0) + (t2.prefers(a, b) ? 1 : 0) +
                              (t3.prefers(a, b) ? 1 : 0);
            if (votes >= 2)
                g.orient(a, b);
            else
                g.orient(b, a);
        }
    }
    return g;
}

Count weighted_in_degree(const CountTournament& t, int v) {
    if (v < 1 || v > t.size()) throw invalid_input("weighted_in_degree: vertex out of range");
    Count total = 0;
    for (int u = 1; u <= t.size(); ++u)
        if (u != v) total += t.counts(u, v);
    return total;
}

std::vector<Count> all_in_degrees(const CountTournament& t) {
    std::vector<Count> degrees(static_cast<std::size_t>(t.size()), 0);
    for (int u = 1; u <= t.size(); ++u)
        for (int v = 1; v <= t.size(); ++v)
            if (u != v) degrees[static_cast<std::size_t>(v - 1)] += t.counts(u, v);
    return degrees;
}

std::optional<std::string> validate(const CountTournament& t) {
    const int d = t.size();
    const Count n = t.total_rankings();
    for (int a = 1; a <= d; ++a) {
        if (t.counts(a, a) != 0)
            return "nonzero diagonal at vertex " + std::to_string(a);
        for (int b = a + 1; b <= d; ++b) {
            if (t.counts(a, b) < 0 || t.counts(b, a) < 0)
                return "negative count on pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
            if (t.counts(a, b) + t.counts(b, a) != n)
                return "pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") counts do not sum to n";
        }
    }
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            if (b == a) continue;
            for (int c = 1; c <= d; ++c) {
                if (c == a || c == b) continue;
                if (t.counts(a, b) > t.counts(a, c) + t.counts(c, b))
                    return "triangle violation on (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
            }
        }
    return std::nullopt;
}

} // namespace fairagg
