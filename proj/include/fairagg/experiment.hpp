#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairagg/aggregate.hpp"
#include "fairagg/harness.hpp"

namespace fairagg {

enum class SweepAxis { rankings, candidates, prefix, alpha_scale };

std::string axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);

struct AlgorithmSpec {
    enum class Id { pipeline, best_from_input, generic, generic_fast, oracle };

    Id id = Id::pipeline;
    AggregatorChoice::Kind inner = AggregatorChoice::Kind::exact_dp; // pipeline only

    std::string label() const;
    static AlgorithmSpec from_name(const std::string& name,
                                   AggregatorChoice::Kind inner_kind);
};

struct ExperimentConfig {
    SweepAxis axis = SweepAxis::prefix;
    std::vector<Rational> values;
    Instance base;
    std::vector<AlgorithmSpec> algorithms;
    int seeds_per_point = 1;
    std::uint64_t root_seed = 0;
    bool record_timing = true; // false pins wall_ms to 0 for byte-stable output
};

struct ResultRow {
    std::string axis_value;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::optional<Count> objective;
    std::optional<Count> opt;
    std::optional<double> ratio;
    std::int64_t wall_ms = 0;
    std::string error;
};

/// Runs every (axis value, seed, algorithm) cell; per-cell failures land in
/// the row's error column and the sweep continues. Cells run concurrently,
/// rows are emitted in deterministic (value, seed, algorithm) order.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

// Instance the sweep actually runs at one axis value (exposed for tests).
Instance derive_instance(const Instance& base, SweepAxis axis, const Rational& value);

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_json(const std::vector<ResultRow>& rows, std::ostream& out);

} // namespace fairagg
