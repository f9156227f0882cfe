#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scs/strcore.hpp"

namespace scs::verify {

struct CheckOutcome {
    std::string name;
    bool ok = true;
    std::size_t checked = 0;       // individual cases examined
    std::string counterexample;    // dump of the first failing case
};

// Seeded random corpus: dataset i uses seed seed0 + i, n cycling over
// [2, n_max], string lengths in [1, len_max], alphabet sizes 2..4.
std::vector<Dataset> make_corpus(std::size_t count, std::uint64_t seed0, std::size_t n_max = 7,
                                 std::size_t len_max = 10);

// Disturbed overlap lengths match the predicted-overlap algebra exactly
// (m = 2n+1, every ordered pair).
CheckOutcome predicted_overlap_exactness(const std::vector<Dataset>& corpus);

// Disturbing with m = 2n+1 preserves every strict inequality between
// source overlap lengths.
CheckOutcome overlap_order_preservation(const std::vector<Dataset>& corpus);

// All four tie-break policies agree on the disturbed dataset: identical
// final lengths, identical trace prefixes before the first trivial merge,
// and no ties at any positive-maximum step.
CheckOutcome policy_equivalence(const std::vector<Dataset>& corpus);

// |OPT(S') - (m+1) OPT(S)| <= 2n^2 for m in {2n+1, 10(2n+1)}.
CheckOutcome scale_bound(const std::vector<Dataset>& corpus);

// Worst-case family: greedy 4n+2 vs optimal 2n+4 for n in [1, n_max],
// ratio 5/4 at n = 2, ratio strictly increasing and < 2.
CheckOutcome family_ratios(std::size_t n_max = 6);

// Sentinel interleaving maps plain length to sharp length exactly, for
// optima and for every pairwise overlap.
CheckOutcome sentinel_interleave_correspondence(const std::vector<Dataset>& corpus);

// |overlap(s_m, t_m)| = |overlap(s, t)| + (m-1) |overlap(s, t)|_# for every
// pair, on datasets containing the important symbol.
CheckOutcome inflation_identity(const std::vector<Dataset>& corpus, Symbol important,
                                const std::vector<std::size_t>& ms, std::size_t min_datasets);

// The sharp-greedy merge order is step-wise maximal for the inflated
// dataset at m = 2 * (max plain overlap) * n + 1.
CheckOutcome sharp_order_lifting(const std::vector<Dataset>& corpus, Symbol important,
                                 std::size_t min_datasets);

// exact_scs agrees with the brute-force permutation scan.
CheckOutcome oracle_equivalence(const std::vector<Dataset>& corpus);

// choose_m_for_gap preserves the greedy-vs-optimal gap of the worst-case
// family at lambda = 1 for n in {2, 3}.
CheckOutcome gap_preservation();

// Formats one "PASS name (k cases)" / "FAIL name ..." line.
std::string format_outcome(const CheckOutcome& outcome);

}  // namespace scs::verify
