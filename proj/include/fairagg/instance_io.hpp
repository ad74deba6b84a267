#pragma once

#include <string>

#include "fairagg/instance.hpp"

namespace fairagg {

// Text instance format, one field block per line:
//   line 1:  d n g k
//   line 2:  groups: one group id per candidate, candidate 1 first
//   line 3:  alpha: g rationals ("p/q" or decimal)
//   line 4:  beta:  g rationals
//   then n ranking lines, candidate ids top-first.
// '#'-prefixed lines are comments; blank lines are ignored.

Instance parse_instance_text(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// One ranking in text form: whitespace-separated ids, top first.
Ranking parse_ranking_line(const std::string& line);
std::string format_ranking(const Ranking& pi);

// Reads the single non-comment line of a ranking file.
Ranking load_single_ranking(const std::string& path);

} // namespace fairagg
