#pragma once

#include "scs/greedy.hpp"
#include "scs/oracle.hpp"
#include "scs/rational.hpp"
#include "scs/strcore.hpp"

namespace scs {

// Per-string merge roles extracted from a greedy trace: alpha[i] is the
// step (1-based) at which string i was the right part of a non-trivial
// merge before T, beta[i] the step at which it was the left part; both
// default to T.
struct StepRoles {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> beta;
    std::size_t T;
};

enum class DisturbVariant {
    Base,        // tail of T - beta[i] sentinels
    AppendOne,   // base plus one extra sentinel per string
    ScaledTail,  // tail of n * (T - beta[i]) sentinels
};

struct DisturbParams {
    std::size_t m;
    Symbol sentinel;
    DisturbVariant variant = DisturbVariant::Base;
};

StepRoles step_roles(const MergeTrace& trace, std::size_t n);

// Smallest legal m for a variant: m > 2n for Base/AppendOne,
// m > 2n(n+1) for ScaledTail.
std::size_t min_disturb_m(std::size_t n, DisturbVariant variant);

// The disturbing transformation: sentinel^(m - alpha[i]) before the first
// symbol, sentinel^m between symbols, and the variant's tail after the
// last. Validates the sentinel is absent from d and that the output is
// substring-free.
Dataset disturb(const Dataset& d, const StepRoles& roles, const DisturbParams& params);

// Predicted disturbed overlap length for a source overlap of length k:
// (m+1)k - alpha_j + T - beta_i when k > 0, else min(T - beta_i, m - alpha_j).
std::size_t predicted_overlap_len(std::size_t k, std::size_t alpha_j, std::size_t beta_i,
                                  std::size_t T, std::size_t m);

// Variant-aware prediction: AppendOne extends every overlap by the extra
// trailing sentinel, ScaledTail scales the tail term by n.
std::size_t predicted_overlap_len_variant(std::size_t k, std::size_t alpha_j, std::size_t beta_i,
                                          std::size_t T, std::size_t m, std::size_t n,
                                          DisturbVariant variant);

// True iff at every greedy step whose maximum overlap is positive exactly
// one ordered pair attains the maximum.
bool check_tie_free(const Dataset& d_prime);

// Doubling search for an m whose disturbed dataset preserves the
// greedy-vs-optimal gap: smallest tested m from {2n+1, 2(2n+1), 4(2n+1), ...}
// with |GA(S')| > lambda * |OPT(S')|. The source gap |B(S)| > lambda * |OPT(S)|
// is re-verified from trace_b; violation throws "no gap to preserve".
std::size_t choose_m_for_gap(const Dataset& d, const MergeTrace& trace_b, const Rational& lambda,
                             std::size_t m_cap = 100000);

// Picks a symbol absent from every string of d, preferring '$'.
Symbol fresh_sentinel(const Dataset& d);

}  // namespace scs
