#pragma once

#include <cstdint>

#include "scs/strcore.hpp"

namespace scs {

// The worst-case family { c(ab)^n, (ab)^n c, (ba)^n } over {a, b, c}.
// Greedy produces length 4n+2 while the optimum is 2n+4.
Dataset worst_case_family(std::size_t n);

// n strings drawn uniformly with SplitMix64(seed): lengths uniform in
// [len_min, len_max], symbols uniform over {'a', ...}. The draw is
// normalized, so the result may contain fewer than n strings.
Dataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t len_min,
                       std::size_t len_max, std::size_t alphabet_size);

// n/2 disjoint string pairs over disjoint sub-alphabets, each pair sharing
// an overlap of exactly `overlap_len` symbols, so greedy step 1 sees at
// least n/2 tied maximum pairs. n must be even and >= 4; overlap_len >= 1.
Dataset tie_rich_dataset(std::uint64_t seed, std::size_t n, std::size_t overlap_len);

}  // namespace scs
