#pragma once

#include <iosfwd>
#include <string>

#include "scs/disturb.hpp"
#include "scs/greedy.hpp"
#include "scs/strcore.hpp"

namespace scs {

std::string encode_utf8(const SString& s);
std::string encode_utf8(Symbol c);
SString decode_utf8(const std::string& bytes);  // throws on malformed input

// Dataset text format: UTF-8, one string per line, no blank lines. A
// post-transformation file starts with the directive
//   #! sentinel=<char> in-use
// and only such files may contain the sentinel.
Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const Dataset& d);
void write_dataset_file(const std::string& path, const Dataset& d);

// GreedyResult document. Fields (stable): superstring, permutation
// (1-based), first_trivial (index or "none"), steps (count), then one
// "step: l r overlap_len [sharp_len]" line per merge.
std::string format_greedy_result(const GreedyResult& res);

// Sidecar report for a disturbed dataset: alpha, beta, T, m, and the
// predicted vs. actual overlap matrix over ordered pairs.
std::string format_disturb_report(const Dataset& source, const Dataset& disturbed,
                                  const StepRoles& roles, const DisturbParams& params);

}  // namespace scs
