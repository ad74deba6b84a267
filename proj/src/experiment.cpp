#include "fairagg/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <utility>

#include "fairagg/generic.hpp"
#include "fairagg/rng.hpp"

namespace fairagg {

std::string axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::rankings: return "n";
        case SweepAxis::candidates: return "d";
        case SweepAxis::prefix: return "k";
        case SweepAxis::alpha_scale: return "alpha";
    }
    return "?";
}

SweepAxis axis_from_name(const std::string& name) {
    if (name == "n") return SweepAxis::rankings;
    if (name == "d") return SweepAxis::candidates;
    if (name == "k") return SweepAxis::prefix;
    if (name == "alpha") return SweepAxis::alpha_scale;
    throw invalid_input("unknown sweep axis: " + name);
}

std::string AlgorithmSpec::label() const {
    switch (id) {
        case Id::pipeline:
            return inner == AggregatorChoice::Kind::exact_dp ? "pipeline-exact"
                                                             : "pipeline-kwiksort";
        case Id::best_from_input: return "best-from-input";
        case Id::generic: return "generic";
        case Id::generic_fast: return "generic-fast";
        case Id::oracle: return "oracle";
    }
    return "?";
}

AlgorithmSpec AlgorithmSpec::from_name(const std::string& name,
                                       AggregatorChoice::Kind inner_kind) {
    AlgorithmSpec spec;
    spec.inner = inner_kind;
    if (name == "pipeline") {
        spec.id = Id::pipeline;
    } else if (name == "best-from-input") {
        spec.id = Id::best_from_input;
    } else if (name == "generic") {
        spec.id = Id::generic;
    } else if (name == "generic-fast") {
        spec.id = Id::generic_fast;
    } else if (name == "oracle") {
        spec.id = Id::oracle;
    } else {
        throw invalid_input("unknown algorithm: " + name);
    }
    return spec;
}

namespace {

std::int64_t as_int(const Rational& value, const char* what) {
    if (denominator(value) != 1)
        throw invalid_input(std::string(what) + " must be an integer");
    return static_cast<std::int64_t>(numerator(value));
}

} // namespace

Instance derive_instance(const Instance& base, SweepAxis axis, const Rational& value) {
    switch (axis) {
        case SweepAxis::rankings: {
            const std::int64_t n = as_int(value, "ranking-count axis value");
            if (n < 1 || n > base.ranking_count())
                throw invalid_input("ranking-count axis value outside 1..n");
            std::vector<Ranking> prefix(base.rankings.begin(),
                                        base.rankings.begin() + static_cast<std::ptrdiff_t>(n));
            return Instance(base.universe, base.spec, std::move(prefix));
        }
        case SweepAxis::candidates: {
            const std::int64_t d = as_int(value, "candidate-count axis value");
            if (d < 1 || d > base.candidate_count())
                throw invalid_input("candidate-count axis value outside 1..d");
            std::vector<int> keep(static_cast<std::size_t>(d));
            for (std::int64_t c = 1; c <= d; ++c) keep[static_cast<std::size_t>(c - 1)] = static_cast<int>(c);
            std::vector<int> group_of(keep.size());
            for (std::int64_t c = 1; c <= d; ++c)
                group_of[static_cast<std::size_t>(c - 1)] = base.universe.group_of(static_cast<int>(c));
            GroupedUniverse universe(static_cast<int>(d), base.universe.group_count(),
                                     std::move(group_of));
            // Quotas become the restricted universe's group proportions.
            std::vector<Rational> proportions;
            for (int i = 1; i <= universe.group_count(); ++i)
                proportions.emplace_back(universe.group_size(i), d);
            const int k = std::min<int>(base.spec.prefix_length(), static_cast<int>(d));
            FairnessSpec spec(proportions, proportions, k);
            std::vector<Ranking> restricted;
            restricted.reserve(base.rankings.size());
            for (const Ranking& pi : base.rankings)
                restricted.emplace_back(restrict_to(pi, keep));
            return Instance(std::move(universe), std::move(spec), std::move(restricted));
        }
        case SweepAxis::prefix: {
            const std::int64_t k = as_int(value, "prefix axis value");
            if (k < 1 || k > base.candidate_count())
                throw invalid_input("prefix axis value outside 1..d");
            std::vector<Rational> alphas, betas;
            for (int i = 1; i <= base.universe.group_count(); ++i) {
                alphas.push_back(base.spec.alpha(i));
                betas.push_back(base.spec.beta(i));
            }
            return Instance(base.universe, FairnessSpec(alphas, betas, static_cast<int>(k)),
                            base.rankings);
        }
        case SweepAxis::alpha_scale: {
            if (value < 0) throw invalid_input("alpha scale must be nonnegative");
            std::vector<Rational> alphas, betas;
            for (int i = 1; i <= base.universe.group_count(); ++i) {
                alphas.push_back(base.spec.alpha(i) * value);
                betas.push_back(base.spec.beta(i));
            }
            return Instance(base.universe,
                            FairnessSpec(alphas, betas, base.spec.prefix_length()),
                            base.rankings);
        }
    }
    throw invalid_input("unknown sweep axis");
}

namespace {

struct PointOutcome {
    std::vector<ResultRow> rows;
};

std::pair<Ranking, Count> run_algorithm(const Instance& inst, const AlgorithmSpec& algo,
                                        std::uint64_t seed) {
    switch (algo.id) {
        case AlgorithmSpec::Id::pipeline: {
            AggregatorChoice inner;
            inner.kind = algo.inner;
            inner.seed = seed;
            return fair_aggregate(inst, inner);
        }
        case AlgorithmSpec::Id::best_from_input: return best_from_input(inst);
        case AlgorithmSpec::Id::generic: {
            const FasMode mode =
                inst.candidate_count() <= 15 ? FasMode::exact_dp : FasMode::pivot_local_search;
            return generic_fair_ra(inst, mode, seed);
        }
        case AlgorithmSpec::Id::generic_fast: {
            FastConfig cfg;
            cfg.seed = seed;
            const FasMode mode =
                inst.candidate_count() <= 15 ? FasMode::exact_dp : FasMode::pivot_local_search;
            return generic_fair_ra_fast(inst, cfg, mode);
        }
        case AlgorithmSpec::Id::oracle: return exact_fair_opt(inst);
    }
    throw invalid_input("unknown algorithm id");
}

std::string sanitize(std::string message) {
    for (char& c : message)
        if (c == ',' || c == '\n' || c == '"') c = ';';
    return message;
}

PointOutcome run_point(const ExperimentConfig& cfg, std::size_t value_idx, int rep) {
    PointOutcome out;
    const Rational& value = cfg.values[value_idx];
    const std::string value_text = format_rational(value);
    const std::uint64_t point_seed =
        derive_seed(cfg.root_seed, value_idx * 1000003ULL + static_cast<std::uint64_t>(rep));

    Instance derived;
    std::string derive_error;
    bool derived_ok = false;
    try {
        derived = derive_instance(cfg.base, cfg.axis, value);
        derived_ok = true;
    } catch (const std::exception& e) {
        derive_error = sanitize(e.what());
    }

    std::optional<Count> opt;
    if (derived_ok) {
        try {
            opt = exact_fair_opt(derived).second;
        } catch (const budget_exceeded&) {
            // over oracle budget: leave the opt column blank
        }
    }

    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        const AlgorithmSpec& algo = cfg.algorithms[a];
        ResultRow row;
        row.axis_value = value_text;
        row.algorithm = algo.label();
        row.seed = derive_seed(point_seed, a);
        if (!derived_ok) {
            row.error = derive_error;
            out.rows.push_back(std::move(row));
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [ranking, value_out] = run_algorithm(derived, algo, row.seed);
            row.objective = value_out;
            row.opt = opt;
            if (opt) {
                if (*opt > 0)
                    row.ratio = static_cast<double>(value_out) / static_cast<double>(*opt);
                else if (value_out == 0)
                    row.ratio = 1.0;
            }
        } catch (const std::exception& e) {
            row.error = sanitize(e.what());
        }
        if (cfg.record_timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            row.wall_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.values.empty()) throw invalid_input("experiment needs at least one axis value");
    if (cfg.algorithms.empty()) throw invalid_input("experiment needs at least one algorithm");
    if (cfg.seeds_per_point < 1) throw invalid_input("seeds_per_point must be at least 1");

    std::vector<std::future<PointOutcome>> futures;
    futures.reserve(cfg.values.size() * static_cast<std::size_t>(cfg.seeds_per_point));
    for (std::size_t v = 0; v < cfg.values.size(); ++v)
        for (int rep = 0; rep < cfg.seeds_per_point; ++rep)
            futures.push_back(std::async(std::launch::async, run_point, std::cref(cfg), v, rep));

    std::vector<ResultRow> rows;
    for (auto& f : futures) {
        PointOutcome outcome = f.get();
        for (ResultRow& row : outcome.rows) rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_ratio(double ratio) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", ratio);
    return buffer;
}

} // namespace

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "axis,algorithm,seed,objective,opt,ratio,wall_ms,error\n";
    for (const ResultRow& row : rows) {
        out << row.axis_value << ',' << row.algorithm << ',' << row.seed << ',';
        if (row.objective) out << *row.objective;
        out << ',';
        if (row.opt) out << *row.opt;
        out << ',';
        if (row.ratio) out << format_ratio(*row.ratio);
        out << ',' << row.wall_ms << ',' << row.error << '\n';
    }
}

void write_json(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ResultRow& row = rows[i];
        out << (i ? ",\n " : "\n ");
        out << "{\"axis\":\"" << row.axis_value << "\",\"algorithm\":\"" << row.algorithm
            << "\",\"seed\":" << row.seed;
        out << ",\"objective\":";
        if (row.objective) out << *row.objective; else out << "null";
        out << ",\"opt\":";
        if (row.opt) out << *row.opt; else out << "null";
        out << ",\"ratio\":";
        if (row.ratio) out << format_ratio(*row.ratio); else out << "null";
        out << ",\"wall_ms\":" << row.wall_ms;
        out << ",\"error\":\"" << row.error << "\"}";
    }
    out << "\n]\n";
}

} // namespace fairagg
