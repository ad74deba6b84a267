// Acceptance suite: one line per criterion, nonzero exit if any fail.
//
// Each criterion regenerates its own instances from fixed seeds, checks the
// implementation against independent oracles (exhaustive enumeration, naive
// pair counting, closed forms), and reports pass/fail with a short tally.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fairagg/aggregate.hpp"
#include "fairagg/bipartition.hpp"
#include "fairagg/closest_fair.hpp"
#include "fairagg/experiment.hpp"
#include "fairagg/generic.hpp"
#include "fairagg/harness.hpp"
#include "fairagg/instance_io.hpp"
#include "fairagg/rng.hpp"
#include "oracles.hpp"

using namespace fairagg;
using testsupport::random_ranking;

namespace {

struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::string note;

    void expect(bool ok) {
        ++checked;
        if (!ok) ++failed;
    }
};

bool criterion_bipartition_exactness(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC1);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + static_cast<int>(bounded(rng, 11)); // 2..12
        const int n = 1 + static_cast<int>(bounded(rng, 7));
        const auto rc = testsupport::random_feasible_case(rng, d, 3);
        std::vector<Ranking> rankings;
        for (int i = 0; i < n; ++i) rankings.push_back(random_ranking(rng, d));
        const CountTournament t = build_tournament(rankings);
        const Bipartition split = colorful_bipartition(t, rc.universe, rc.spec);
        const auto [oracle_split, oracle_cost] = bipartition_oracle(t, rc.universe, rc.spec);
        tally.expect(cut_cost(t, split.left) == oracle_cost &&
                     static_cast<int>(split.left.size()) == rc.spec.prefix_length());
    }
    return tally.failed == 0;
}

bool criterion_swap_identity(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC2);
    while (tally.checked < 10000) {
        const int d = 2 + static_cast<int>(bounded(rng, 11));
        const int n = 1 + static_cast<int>(bounded(rng, 7));
        std::vector<Ranking> rankings;
        for (int i = 0; i < n; ++i) rankings.push_back(random_ranking(rng, d));
        const CountTournament t = build_tournament(rankings);
        const std::vector<Count> degree = all_in_degrees(t);

        std::vector<int> left, outside;
        for (int c = 1; c <= d; ++c) (bounded(rng, 2) ? left : outside).push_back(c);
        if (left.empty() || outside.empty()) continue;
        const int x = left[bounded(rng, left.size())];
        const int y = outside[bounded(rng, outside.size())];
        const Count delta = swap_cost_delta(t, left, x, y);
        const Count dx = degree[static_cast<std::size_t>(x - 1)];
        const Count dy = degree[static_cast<std::size_t>(y - 1)];
        tally.expect(delta == dy - dx && (dx < dy || delta <= 0));
    }
    return tally.failed == 0;
}

bool criterion_closest_fair_exactness(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC3);
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + static_cast<int>(bounded(rng, 7)); // 2..8
        const auto rc = testsupport::random_feasible_case(rng, d, 3);
        const Ranking pi = random_ranking(rng, d);
        const auto [sigma, dist] = closest_fair_ranking(pi, rc.universe, rc.spec);
        const auto [o_sigma, o_dist] = closest_fair_oracle(pi, rc.universe, rc.spec);
        tally.expect(dist == o_dist && kendall_tau(pi, sigma) == dist &&
                     is_fair(sigma, rc.universe, rc.spec));
    }
    return tally.failed == 0;
}

// shared instance set for the three approximation criteria
std::vector<Instance> approximation_instances() {
    std::vector<Instance> instances;
    std::mt19937_64 rng = make_rng(0xACC4);
    while (instances.size() < 300) {
        const int d = 2 + static_cast<int>(bounded(rng, 7)); // 2..8
        const int n = 1 + static_cast<int>(bounded(rng, 7)); // 1..7
        instances.push_back(testsupport::random_instance(rng, d, n, 3));
    }
    return instances;
}

bool criterion_pipeline_bound(const std::vector<Instance>& instances,
                              const std::vector<Count>& opts, Tally& tally) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto [ranking, value] =
            fair_aggregate(instances[i], AggregatorChoice::exact_dp_choice());
        tally.expect(value <= 2 * opts[i] &&
                     is_fair(ranking, instances[i].universe, instances[i].spec));
    }
    return tally.failed == 0;
}

bool criterion_baseline_bound(const std::vector<Instance>& instances,
                              const std::vector<Count>& opts, Tally& tally) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto [ranking, value] = best_from_input(instances[i]);
        tally.expect(value <= 3 * opts[i] &&
                     is_fair(ranking, instances[i].universe, instances[i].spec));
    }
    return tally.failed == 0;
}

bool criterion_generic_bound(const std::vector<Instance>& instances,
                             const std::vector<Count>& opts, Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC6);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto [b_ranking, baseline] = best_from_input(instances[i]);
        const auto [ranking, value] = generic_fair_ra(instances[i], FasMode::exact_dp, 0);
        const auto [h_ranking, heuristic_value] =
            generic_fair_ra(instances[i], FasMode::pivot_local_search, rng());
        // 2.881 bound kept in exact integer arithmetic
        tally.expect(1000 * value <= 2881 * opts[i] && value <= baseline &&
                     heuristic_value <= baseline &&
                     is_fair(ranking, instances[i].universe, instances[i].spec));
    }
    return tally.failed == 0;
}

bool criterion_tight_family(Tally& tally) {
    for (std::int64_t s : {1, 2, 3}) {
        for (std::int64_t t : {1, 2, 5, 20}) {
            const TightParams p{s, t};
            const Instance inst = gen_tight(p);
            const auto [opt_form, pipe_form] = tight_closed_forms(p);
            tally.expect(objective(inst, tight_optimal_ranking(p)) == opt_form);
            tally.expect(objective(inst, tight_pipeline_ranking(p)) == pipe_form);
        }
    }
    // d = 600 member: closed forms against direct summation, ratio above 1.98
    const TightParams big{3, 297};
    const Instance inst = gen_tight(big);
    const auto [opt_form, pipe_form] = tight_closed_forms(big);
    tally.expect(inst.candidate_count() == 600);
    tally.expect(objective(inst, tight_optimal_ranking(big)) == opt_form);
    tally.expect(objective(inst, tight_pipeline_ranking(big)) == pipe_form);
    tally.expect(100 * pipe_form > 198 * opt_form);
    return tally.failed == 0;
}

bool criterion_metric_suite(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC8);
    for (int trial = 0; trial < 5000; ++trial) {
        const int d = 2 + static_cast<int>(bounded(rng, 9));
        const Ranking a = random_ranking(rng, d);
        const Ranking b = random_ranking(rng, d);
        const Ranking c = random_ranking(rng, d);
        const Count ab = kendall_tau(a, b);
        const Count max_pairs = static_cast<Count>(d) * (d - 1) / 2;
        tally.expect(kendall_tau(a, a) == 0 && ab == kendall_tau(b, a) &&
                     kendall_tau(a, c) <= ab + kendall_tau(b, c) && ab >= 0 &&
                     ab <= max_pairs && (ab == max_pairs) == (b == a.reversed()));
    }
    for (int trial = 0; trial < 5000; ++trial) {
        const int d = 2 + static_cast<int>(bounded(rng, 9));
        const Ranking a = random_ranking(rng, d);
        const Ranking b = random_ranking(rng, d);
        std::vector<int> left, right;
        for (int c = 1; c <= d; ++c) (bounded(rng, 2) ? left : right).push_back(c);
        tally.expect(kendall_tau_blocks(a, b, left, left) +
                         kendall_tau_blocks(a, b, right, right) +
                         kendall_tau_blocks(a, b, left, right) ==
                     kendall_tau(a, b));
    }
    for (int d = 1; d <= 6; ++d) {
        const auto rankings = testsupport::all_rankings(d);
        for (const Ranking& a : rankings)
            for (const Ranking& b : rankings)
                tally.expect(kendall_tau(a, b) == testsupport::naive_kendall(a, b));
    }
    return tally.failed == 0;
}

bool criterion_analysis_identities(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACC9);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 3 + static_cast<int>(bounded(rng, 8)); // 3..10
        const int n = 3 + static_cast<int>(bounded(rng, 3)); // 3..5
        const int swaps = static_cast<int>(bounded(rng, 2 * static_cast<std::uint64_t>(d)));
        const Instance inst = gen_random(n, d, 2, std::max(1, d / 2), RandomModel::planted,
                                         rng(), swaps);
        const Ranking planted = Ranking::identity(d); // the planted center
        const AnalysisContext ctx = build_analysis(inst, planted);

        for (int i = 0; i < n; ++i)
            tally.expect(static_cast<Count>(ctx.inversion_sets[static_cast<std::size_t>(i)].size()) ==
                         kendall_tau(inst.rankings[static_cast<std::size_t>(i)], planted));

        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto& a = ctx.inversion_sets[static_cast<std::size_t>(i)];
                const auto& b = ctx.inversion_sets[static_cast<std::size_t>(j)];
                const Count shared = static_cast<Count>(pair_intersection(a, b).size());
                tally.expect(kendall_tau(inst.rankings[static_cast<std::size_t>(i)],
                                         inst.rankings[static_cast<std::size_t>(j)]) ==
                             static_cast<Count>(a.size() + b.size()) - 2 * shared);
            }

        // every 3-subset: exact deletion count at most the shared-inversion bound
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const MajorityTournament g = majority_tournament(
                        inst.rankings[static_cast<std::size_t>(i)],
                        inst.rankings[static_cast<std::size_t>(j)],
                        inst.rankings[static_cast<std::size_t>(k)]);
                    const FasResult exact = fas_order(g, FasMode::exact_dp, 0);
                    const auto bound = pair_union(
                        pair_union(pair_intersection(ctx.inversion_sets[static_cast<std::size_t>(i)],
                                                     ctx.inversion_sets[static_cast<std::size_t>(j)]),
                                   pair_intersection(ctx.inversion_sets[static_cast<std::size_t>(j)],
                                                     ctx.inversion_sets[static_cast<std::size_t>(k)])),
                        pair_intersection(ctx.inversion_sets[static_cast<std::size_t>(i)],
                                          ctx.inversion_sets[static_cast<std::size_t>(k)]));
                    tally.expect(exact.back_edge_count <= static_cast<Count>(bound.size()));
                }
    }
    return tally.failed == 0;
}

bool criterion_fast_variant(Tally& tally) {
    std::mt19937_64 rng = make_rng(0xACCA);

    // (a) exact objective of the randomized variant within 3x optimal in >= 95%
    long long runs = 0, within = 0;
    for (int inst_idx = 0; inst_idx < 20; ++inst_idx) {
        const int d = 4 + static_cast<int>(bounded(rng, 5));  // 4..8
        const int n = 10 + static_cast<int>(bounded(rng, 21)); // 10..30
        const Instance inst = testsupport::random_instance(rng, d, n, 3);
        const Count opt = exact_fair_opt(inst).second;
        for (int rep = 0; rep < 10; ++rep) {
            FastConfig cfg;
            cfg.oversampling = 1.5; // genuine subsampling at these input counts
            cfg.gamma = 0.05;
            cfg.seed = rng();
            const auto [ranking, value] = generic_fair_ra_fast(inst, cfg, FasMode::exact_dp);
            ++runs;
            if (10 * value <= 30 * opt) ++within;
            tally.expect(is_fair(ranking, inst.universe, inst.spec));
        }
    }
    const bool bound_ok = within * 100 >= runs * 95;
    tally.expect(bound_ok);

    // (b) coreset accuracy at n = 200, d = 20 over 100 fair candidates per draw
    long long coreset_checks = 0, coreset_within = 0;
    {
        const Instance inst = testsupport::random_instance(rng, 20, 200, 3);
        FastConfig cfg; // default gamma = 0.01, band 1 +- 0.05
        for (int draw = 0; draw < 5; ++draw) {
            cfg.seed = rng();
            const WeightedRankingSet coreset = build_coreset(inst.rankings, cfg);
            Rational weight_total = 0;
            for (const auto& [r, w] : coreset.items) weight_total += w;
            tally.expect(weight_total == Rational(inst.ranking_count()));
            for (int probe = 0; probe < 100; ++probe) {
                const Ranking fair_candidate =
                    closest_fair_ranking(random_ranking(rng, 20), inst.universe, inst.spec)
                        .first;
                const Rational approx = weighted_objective(coreset, fair_candidate);
                const Rational exact(objective(inst, fair_candidate));
                ++coreset_checks;
                if (approx >= exact * Rational(95, 100) && approx <= exact * Rational(105, 100))
                    ++coreset_within;
            }
        }
    }
    const bool coreset_ok = coreset_within * 100 >= coreset_checks * 95;
    tally.expect(coreset_ok);

    // (c) subsample size concentration at n = 10000, s = 50
    {
        std::vector<Ranking> many;
        many.reserve(10000);
        for (int i = 0; i < 10000; ++i) many.push_back(random_ranking(rng, 4));
        const double expected = 4.0 * 50.0 * std::log(10000.0); // about 1842
        const double cap = 10.0 * 50.0 * std::log(10000.0);
        for (int rep = 0; rep < 20; ++rep) {
            FastConfig cfg;
            cfg.seed = rng();
            const double size = static_cast<double>(sample_candidates(many, cfg).size());
            tally.expect(size >= 0.75 * expected && size <= 1.25 * expected && size <= cap);
        }
    }

    std::ostringstream note;
    note << "3x-opt in " << within << "/" << runs << " runs, coreset band " << coreset_within
         << "/" << coreset_checks;
    tally.note = note.str();
    return tally.failed == 0;
}

bool criterion_determinism(Tally& tally) {
    // library-level: seeded algorithms repeat exactly
    std::mt19937_64 rng = make_rng(0xACCB);
    for (int trial = 0; trial < 10; ++trial) {
        const Instance inst = testsupport::random_instance(rng, 7, 6, 3);
        const std::uint64_t seed = rng();
        tally.expect(fair_aggregate(inst, AggregatorChoice::kwiksort_choice(seed)) ==
                     fair_aggregate(inst, AggregatorChoice::kwiksort_choice(seed)));
        FastConfig cfg;
        cfg.seed = seed;
        tally.expect(generic_fair_ra_fast(inst, cfg, FasMode::exact_dp) ==
                     generic_fair_ra_fast(inst, cfg, FasMode::exact_dp));
    }
    const Instance a = gen_random(8, 9, 3, 4, RandomModel::uniform, 77);
    const Instance b = gen_random(8, 9, 3, 4, RandomModel::uniform, 77);
    tally.expect(a.rankings == b.rankings);
    tally.expect(serialize_instance(a) == serialize_instance(b));

    // sweep-level: parallel execution, byte-identical CSV and JSON
    ExperimentConfig cfg;
    cfg.base = gen_random(6, 8, 2, 4, RandomModel::uniform, 17);
    cfg.axis = SweepAxis::prefix;
    cfg.values = {Rational(2), Rational(4), Rational(6)};
    cfg.algorithms = {
        AlgorithmSpec::from_name("pipeline", AggregatorChoice::Kind::kwiksort),
        AlgorithmSpec::from_name("generic-fast", AggregatorChoice::Kind::exact_dp),
        AlgorithmSpec::from_name("oracle", AggregatorChoice::Kind::exact_dp)};
    cfg.seeds_per_point = 3;
    cfg.root_seed = 99;
    cfg.record_timing = false;
    std::ostringstream csv1, csv2, json1, json2;
    const auto rows1 = run_experiment(cfg);
    const auto rows2 = run_experiment(cfg);
    write_csv(rows1, csv1);
    write_csv(rows2, csv2);
    write_json(rows1, json1);
    write_json(rows2, json2);
    tally.expect(csv1.str() == csv2.str());
    tally.expect(json1.str() == json2.str());
    tally.expect(!csv1.str().empty());
    return tally.failed == 0;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;

    struct Criterion {
        std::string name;
        std::function<bool(Tally&)> run;
    };

    // criteria 4-6 share one instance set and its oracle values
    const std::vector<Instance> shared = approximation_instances();
    std::vector<Count> shared_opts;
    shared_opts.reserve(shared.size());
    for (const Instance& inst : shared) shared_opts.push_back(exact_fair_opt(inst).second);

    const std::vector<Criterion> criteria{
        {"1 bi-partition exactness vs exhaustive oracle (500 instances)",
         criterion_bipartition_exactness},
        {"2 swap cost identity (10000 tuples)", criterion_swap_identity},
        {"3 closest-fair distance vs enumeration (500 cases)",
         criterion_closest_fair_exactness},
        {"4 pipeline objective within 2x optimal, output fair (300 instances)",
         [&](Tally& t) { return criterion_pipeline_bound(shared, shared_opts, t); }},
        {"5 baseline objective within 3x optimal (300 instances)",
         [&](Tally& t) { return criterion_baseline_bound(shared, shared_opts, t); }},
        {"6 generic objective within 2.881x optimal and never above baseline",
         [&](Tally& t) { return criterion_generic_bound(shared, shared_opts, t); }},
        {"7 adversarial family closed forms, ratio > 1.98 at d=600",
         criterion_tight_family},
        {"8 metric axioms, split decomposition, exhaustive inversion counts",
         criterion_metric_suite},
        {"9 planted-reference identities and shared-inversion deletion bound (200 instances)",
         criterion_analysis_identities},
        {"10 randomized variant envelope, coreset band, subsample concentration",
         criterion_fast_variant},
        {"11 seeded determinism, including parallel sweeps", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Tally tally;
        const auto start = Clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = criterion.run(tally);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const long long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        std::printf("[%s] %s: %lld/%lld checks ok%s%s%s%s (%lld ms)\n", ok ? "PASS" : "FAIL",
                    criterion.name.c_str(), tally.checked - tally.failed, tally.checked,
                    tally.note.empty() ? "" : " [", tally.note.c_str(),
                    tally.note.empty() ? "" : "]", error.empty() ? "" : (" exception: " + error).c_str(),
                    ms);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
