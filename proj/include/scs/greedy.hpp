#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scs/strcore.hpp"

namespace scs {

// Deterministic 64-bit generator (splitmix-style). State advance:
//   x += 0x9E3779B97F4A7C15
//   z = x; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// A deterministic rule selecting one pair among all maximum-overlap
// candidates. Candidates are presented in row-major order over
// (left chain, right chain) positions, so every kind is reproducible.
struct TieBreakPolicy {
    enum class Kind { FirstPair, LastPair, LexMerge, SeededRandom };

    Kind kind = Kind::FirstPair;
    std::uint64_t seed = 0;

    static TieBreakPolicy first_pair() { return {Kind::FirstPair, 0}; }
    static TieBreakPolicy last_pair() { return {Kind::LastPair, 0}; }
    static TieBreakPolicy lex_merge() { return {Kind::LexMerge, 0}; }
    static TieBreakPolicy seeded_random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }

    // Accepts "first", "last", "lex", "random:<seed>".
    static TieBreakPolicy parse(const std::string& text);
    std::string name() const;
};

// One greedy merge: the original index of the LAST string of the left
// chain, the original index of the FIRST string of the right chain, and
// the overlap length of the merged chain texts. `sharp_len` is the
// important-symbol count of that overlap, populated only by the sharp run.
struct TraceStep {
    int left;
    int right;
    std::size_t overlap_len;
    std::optional<std::size_t> sharp_len;
};

struct MergeTrace {
    std::vector<TraceStep> steps;
    std::optional<std::size_t> first_trivial;  // 1-based step index

    // T convention: first trivial step if any, else (#steps)+1. For a
    // single-string dataset the trace is empty and T() = 1.
    std::size_t T() const { return first_trivial ? *first_trivial : steps.size() + 1; }
};

struct GreedyResult {
    SString superstring;
    std::vector<int> permutation;  // 0-based original indices, final chain order
    MergeTrace trace;
};

// Per-step selection statistics, for tie analysis.
struct StepStats {
    std::size_t max_overlap;
    std::size_t tied_pairs;  // ordered pairs attaining the maximum
};

// The greedy algorithm: repeatedly merge the pair of live chains with the
// largest overlap (of the actual chain texts), breaking ties by `policy`,
// until one chain remains.
GreedyResult run_greedy(const Dataset& d, const TieBreakPolicy& policy,
                        std::vector<StepStats>* stats = nullptr);

// The frequency variant: selection maximizes the important-symbol count of
// the overlap first, then plain overlap length, then the policy.
// first_trivial is the first step whose important-count is 0.
GreedyResult run_greedy_sharp(const Dataset& d, Symbol important, const TieBreakPolicy& policy,
                              std::vector<StepStats>* stats = nullptr);

// Checks all MergeTrace invariants and replays the trace; true iff the
// replay reproduces res.superstring and res.permutation.
bool verify_trace(const Dataset& d, const GreedyResult& res);

// Final superstring length obtained by replaying a recorded merge order on
// d. Throws if the trace does not describe a valid merge sequence.
std::size_t replay_trace_length(const Dataset& d, const MergeTrace& trace);

}  // namespace scs
