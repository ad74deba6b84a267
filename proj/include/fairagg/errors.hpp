#pragma once

#include <stdexcept>
#include <string>

namespace fairagg {

// Malformed arguments: dimension mismatches, ids out of range, bad parses.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Fairness bounds that no size-k prefix can satisfy.
struct infeasible_spec : std::runtime_error {
    explicit infeasible_spec(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive routine asked to enumerate beyond its guard.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fairagg
