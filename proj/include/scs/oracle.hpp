#pragma once

#include "scs/rational.hpp"
#include "scs/strcore.hpp"

namespace scs {

struct ExactResult {
    std::size_t length;             // plain length of `superstring`
    std::vector<int> permutation;   // 0-based
    SString superstring;
    std::size_t sharp_length = 0;   // important-symbol count; set by the sharp solver
};

inline constexpr std::size_t kDefaultOracleCap = 18;

// Exact shortest superstring by subset dynamic programming over
// (visited set, last string), maximizing total overlap.
ExactResult exact_scs(const Dataset& d, std::size_t n_cap = kDefaultOracleCap);

// Exhaustive permutation scan; ties broken by the lexicographically
// smallest permutation. Requires n <= 8.
ExactResult brute_force_scs(const Dataset& d);

// Exact minimizer of the important-symbol count; among sharp-optimal
// permutations returns one with minimal plain length.
ExactResult exact_scs_sharp(const Dataset& d, Symbol important, std::size_t n_cap = kDefaultOracleCap);

// Exact ratio algorithm_length / opt_length. Throws on opt_length = 0.
Rational approx_ratio(std::size_t algorithm_length, std::size_t opt_length);

}  // namespace scs
