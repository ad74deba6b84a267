// fairagg: generate, aggregate, and benchmark fair rank aggregation instances.
//
// Exit codes: 0 success, 2 invalid input, 3 I/O failure, 4 enumeration budget
// exceeded, 5 infeasible fairness spec.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairagg/experiment.hpp"
#include "fairagg/generic.hpp"
#include "fairagg/instance_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInfeasible = 5;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct GenOptions {
    std::string kind;
    std::string out_path;
    std::int64_t s = 1, t = 1;
    int n = 5, d = 8, g = 2, k = 4;
    std::uint64_t seed = 0;
    std::string model = "uniform";
    int swaps = 0;
};

int run_gen(const GenOptions& opt) {
    fairagg::Instance inst;
    if (opt.kind == "tight") {
        inst = fairagg::gen_tight({opt.s, opt.t});
    } else {
        const fairagg::RandomModel model = opt.model == "planted"
                                               ? fairagg::RandomModel::planted
                                               : fairagg::RandomModel::uniform;
        inst = fairagg::gen_random(opt.n, opt.d, opt.g, opt.k, model, opt.seed, opt.swaps);
    }
    fairagg::save_instance(inst, opt.out_path);
    return kExitOk;
}

struct AggOptions {
    std::string instance_path;
    std::string algo = "pipeline";
    std::string inner = "exact";
    std::uint64_t seed = 0;
    bool json = false;
    std::string timing = "real";
};

int run_agg(const AggOptions& opt) {
    const fairagg::Instance inst = fairagg::load_instance(opt.instance_path);
    const fairagg::AggregatorChoice::Kind inner_kind =
        opt.inner == "kwiksort" ? fairagg::AggregatorChoice::Kind::kwiksort
                                : fairagg::AggregatorChoice::Kind::exact_dp;
    const fairagg::AlgorithmSpec algo = fairagg::AlgorithmSpec::from_name(opt.algo, inner_kind);

    const auto start = std::chrono::steady_clock::now();
    std::pair<fairagg::Ranking, fairagg::Count> result;
    switch (algo.id) {
        case fairagg::AlgorithmSpec::Id::pipeline: {
            fairagg::AggregatorChoice inner;
            inner.kind = inner_kind;
            inner.seed = opt.seed;
            result = fairagg::fair_aggregate(inst, inner);
            break;
        }
        case fairagg::AlgorithmSpec::Id::best_from_input:
            result = fairagg::best_from_input(inst);
            break;
        case fairagg::AlgorithmSpec::Id::generic: {
            const fairagg::FasMode mode = inst.candidate_count() <= 15
                                              ? fairagg::FasMode::exact_dp
                                              : fairagg::FasMode::pivot_local_search;
            result = fairagg::generic_fair_ra(inst, mode, opt.seed);
            break;
        }
        case fairagg::AlgorithmSpec::Id::generic_fast: {
            fairagg::FastConfig cfg;
            cfg.seed = opt.seed;
            const fairagg::FasMode mode = inst.candidate_count() <= 15
                                              ? fairagg::FasMode::exact_dp
                                              : fairagg::FasMode::pivot_local_search;
            result = fairagg::generic_fair_ra_fast(inst, cfg, mode);
            break;
        }
        case fairagg::AlgorithmSpec::Id::oracle:
            result = fairagg::exact_fair_opt(inst);
            break;
    }
    std::int64_t wall_ms = 0;
    if (opt.timing == "real") {
        wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    }

    if (opt.json) {
        nlohmann::json out;
        out["algorithm"] = algo.label();
        out["objective"] = result.second;
        out["ranking"] = result.first.order();
        out["wall_ms"] = wall_ms;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "algorithm: " << algo.label() << "\n"
                  << "objective: " << result.second << "\n"
                  << "ranking: " << fairagg::format_ranking(result.first) << "\n"
                  << "wall_ms: " << wall_ms << "\n";
    }
    return kExitOk;
}

struct DistOptions {
    std::string path_a;
    std::string path_b;
};

int run_dist(const DistOptions& opt) {
    const fairagg::Ranking a = fairagg::load_single_ranking(opt.path_a);
    const fairagg::Ranking b = fairagg::load_single_ranking(opt.path_b);
    std::cout << fairagg::kendall_tau(a, b) << "\n";
    return kExitOk;
}

struct BenchOptions {
    std::string instance_path;
    std::string axis = "k";
    std::string values;
    std::string algos;
    std::string inner = "exact";
    int seeds = 1;
    std::uint64_t seed = 0;
    std::string out_base;
    std::string timing = "real";
};

int run_bench(const BenchOptions& opt) {
    fairagg::ExperimentConfig cfg;
    cfg.base = fairagg::load_instance(opt.instance_path);
    cfg.axis = fairagg::axis_from_name(opt.axis);
    for (const std::string& token : split_list(opt.values))
        cfg.values.push_back(fairagg::parse_rational(token));
    const fairagg::AggregatorChoice::Kind inner_kind =
        opt.inner == "kwiksort" ? fairagg::AggregatorChoice::Kind::kwiksort
                                : fairagg::AggregatorChoice::Kind::exact_dp;
    for (const std::string& name : split_list(opt.algos))
        cfg.algorithms.push_back(fairagg::AlgorithmSpec::from_name(name, inner_kind));
    cfg.seeds_per_point = opt.seeds;
    cfg.root_seed = opt.seed;
    cfg.record_timing = opt.timing == "real";
    if (cfg.values.empty()) throw fairagg::invalid_input("no axis values given");
    if (cfg.algorithms.empty()) throw fairagg::invalid_input("no algorithms given");

    const std::vector<fairagg::ResultRow> rows = fairagg::run_experiment(cfg);

    const std::string csv_path = opt.out_base + ".csv";
    const std::string json_path = opt.out_base + ".json";
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::ios_base::failure("cannot open " + csv_path + " for writing");
    fairagg::write_csv(rows, csv);
    csv.flush();
    if (!csv) throw std::ios_base::failure("cannot write " + csv_path);
    std::ofstream json(json_path, std::ios::binary);
    if (!json) throw std::ios_base::failure("cannot open " + json_path + " for writing");
    fairagg::write_json(rows, json);
    json.flush();
    if (!json) throw std::ios_base::failure("cannot write " + json_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair rank aggregation toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    CLI::App* gen_tight_cmd = gen->add_subcommand("tight", "adversarial two-block family");
    gen_tight_cmd->add_option("--s", gen_opt.s, "size of the A and B runs")
        ->check(CLI::PositiveNumber);
    gen_tight_cmd->add_option("--t", gen_opt.t, "size of the C and D runs")
        ->check(CLI::PositiveNumber);
    gen_tight_cmd->add_option("--out", gen_opt.out_path, "output path")->required();
    CLI::App* gen_random_cmd = gen->add_subcommand("random", "random instance");
    gen_random_cmd->add_option("--n", gen_opt.n, "ranking count")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--d", gen_opt.d, "candidate count")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--g", gen_opt.g, "group count")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--k", gen_opt.k, "prefix length")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--seed", gen_opt.seed, "rng seed");
    gen_random_cmd->add_option("--model", gen_opt.model, "uniform or planted")
        ->check(CLI::IsMember({"uniform", "planted"}));
    gen_random_cmd->add_option("--swaps", gen_opt.swaps, "planted adjacent swaps per ranking")
        ->check(CLI::NonNegativeNumber);
    gen_random_cmd->add_option("--out", gen_opt.out_path, "output path")->required();

    AggOptions agg_opt;
    CLI::App* agg = app.add_subcommand("agg", "aggregate one instance");
    agg->add_option("instance", agg_opt.instance_path, "instance file")->required();
    agg->add_option("--algo", agg_opt.algo, "algorithm")
        ->check(CLI::IsMember(
            {"pipeline", "best-from-input", "generic", "generic-fast", "oracle"}));
    agg->add_option("--inner", agg_opt.inner, "pipeline block aggregator")
        ->check(CLI::IsMember({"kwiksort", "exact"}));
    agg->add_option("--seed", agg_opt.seed, "rng seed");
    agg->add_flag("--json", agg_opt.json, "JSON output");
    agg->add_option("--timing", agg_opt.timing, "real or zero wall_ms")
        ->check(CLI::IsMember({"real", "zero"}));

    DistOptions dist_opt;
    CLI::App* dist = app.add_subcommand("dist", "Kendall tau distance of two ranking files");
    dist->add_option("file_a", dist_opt.path_a)->required();
    dist->add_option("file_b", dist_opt.path_b)->required();

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "parameter sweep to CSV/JSON");
    bench->add_option("--instance", bench_opt.instance_path, "base instance file")->required();
    bench->add_option("--axis", bench_opt.axis, "n, d, k, or alpha")
        ->check(CLI::IsMember({"n", "d", "k", "alpha"}));
    bench->add_option("--values", bench_opt.values, "comma-separated axis values")->required();
    bench->add_option("--algos", bench_opt.algos, "comma-separated algorithms")->required();
    bench->add_option("--inner", bench_opt.inner, "pipeline block aggregator")
        ->check(CLI::IsMember({"kwiksort", "exact"}));
    bench->add_option("--seeds", bench_opt.seeds, "repetitions per point")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_opt.seed, "root seed");
    bench->add_option("--out", bench_opt.out_base, "output base path (.csv/.json appended)")
        ->required();
    bench->add_option("--timing", bench_opt.timing, "real or zero wall_ms")
        ->check(CLI::IsMember({"real", "zero"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (gen->parsed()) {
            gen_opt.kind = gen_tight_cmd->parsed() ? "tight" : "random";
            return run_gen(gen_opt);
        }
        if (agg->parsed()) return run_agg(agg_opt);
        if (dist->parsed()) return run_dist(dist_opt);
        if (bench->parsed()) return run_bench(bench_opt);
    } catch (const fairagg::infeasible_spec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const fairagg::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const fairagg::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
