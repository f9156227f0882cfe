#include "scs/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace scs {

namespace {

struct Chain {
    std::vector<int> members;
    SString text;
};

std::vector<Chain> singleton_chains(const Dataset& d) {
    std::vector<Chain> chains;
    chains.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        chains.push_back({{static_cast<int>(i)}, d.strings[i]});
    return chains;
}

// Selection key: (important-count, plain length) for the sharp variant,
// plain length alone otherwise.
struct Key {
    std::size_t primary;
    std::size_t secondary;

    bool operator==(const Key&) const = default;
    bool operator<(const Key& o) const {
        return primary != o.primary ? primary < o.primary : secondary < o.secondary;
    }
};

std::pair<std::size_t, std::size_t> pick(const TieBreakPolicy& policy,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& cands,
                                         const std::vector<Chain>& chains, SplitMix64& rng) {
    switch (policy.kind) {
        case TieBreakPolicy::Kind::FirstPair:
            return cands.front();
        case TieBreakPolicy::Kind::LastPair:
            return cands.back();
        case TieBreakPolicy::Kind::LexMerge: {
            std::size_t best = 0;
            SString best_text = merge(chains[cands[0].first].text, chains[cands[0].second].text);
            for (std::size_t c = 1; c < cands.size(); ++c) {
                SString m = merge(chains[cands[c].first].text, chains[cands[c].second].text);
                if (m < best_text) {
                    best_text = std::move(m);
                    best = c;
                }
            }
            return cands[best];
        }
        case TieBreakPolicy::Kind::SeededRandom:
            return cands[rng.next() % cands.size()];
    }
    throw std::logic_error("unreachable");
}

GreedyResult run(const Dataset& d, std::optional<Symbol> important, const TieBreakPolicy& policy,
                 std::vector<StepStats>* stats) {
    if (d.size() == 0) throw std::invalid_argument("empty dataset");

    std::vector<Chain> chains = singleton_chains(d);
    SplitMix64 rng(policy.seed);
    GreedyResult res;

    while (chains.size() > 1) {
        Key best{0, 0};
        bool have_best = false;
        std::vector<std::pair<std::size_t, std::size_t>> cands;
        for (std::size_t a = 0; a < chains.size(); ++a) {
            for (std::size_t b = 0; b < chains.size(); ++b) {
                if (a == b) continue;
                std::size_t len = overlap_len(chains[a].text, chains[b].text);
                Key k{len, 0};
                if (important) {
                    SString ov = chains[b].text.substr(0, len);
                    k = {count_symbol(ov, *important), len};
                }
                if (!have_best || best < k) {
                    best = k;
                    have_best = true;
                    cands.clear();
                }
                if (k == best) cands.emplace_back(a, b);
            }
        }

        if (stats) stats->push_back({important ? best.secondary : best.primary,
                                     cands.size()});

        auto [a, b] = pick(policy, cands, chains, rng);
        std::size_t plain = important ? best.secondary : best.primary;
        TraceStep step{chains[a].members.back(), chains[b].members.front(), plain, std::nullopt};
        if (important) step.sharp_len = best.primary;

        std::size_t trivial_metric = best.primary;  // count for sharp, length otherwise
        if (trivial_metric == 0 && !res.trace.first_trivial)
            res.trace.first_trivial = res.trace.steps.size() + 1;
        res.trace.steps.push_back(step);

        chains[a].text = merge(chains[a].text, chains[b].text);
        chains[a].members.insert(chains[a].members.end(), chains[b].members.begin(),
                                 chains[b].members.end());
        chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(b));
    }

    res.superstring = chains[0].text;
    res.permutation = chains[0].members;
    return res;
}

struct Replay {
    SString text;
    std::vector<int> permutation;
};

// Re-executes a recorded merge order. Each step names the tail original of
// the left chain and the head original of the right chain; both must
// identify distinct live chains.
Replay replay(const Dataset& d, const MergeTrace& trace) {
    std::vector<Chain> chains = singleton_chains(d);
    for (const TraceStep& step : trace.steps) {
        std::size_t a = chains.size(), b = chains.size();
        for (std::size_t c = 0; c < chains.size(); ++c) {
            if (chains[c].members.back() == step.left) a = c;
            if (chains[c].members.front() == step.right) b = c;
        }
        if (a == chains.size() || b == chains.size() || a == b)
            throw std::invalid_argument("trace step does not match live chains");
        if (overlap_len(chains[a].text, chains[b].text) != step.overlap_len)
            throw std::invalid_argument("trace overlap length does not match chains");
        chains[a].text = merge(chains[a].text, chains[b].text);
        chains[a].members.insert(chains[a].members.end(), chains[b].members.begin(),
                                 chains[b].members.end());
        chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(b));
    }
    if (chains.size() != 1) throw std::invalid_argument("trace does not merge all strings");
    return {chains[0].text, chains[0].members};
}

}  // namespace

TieBreakPolicy TieBreakPolicy::parse(const std::string& text) {
    if (text == "first") return first_pair();
    if (text == "last") return last_pair();
    if (text == "lex") return lex_merge();
    if (text.rfind("random:", 0) == 0)
        return seeded_random(std::stoull(text.substr(7)));
    throw std::invalid_argument("unknown policy: " + text);
}

std::string TieBreakPolicy::name() const {
    switch (kind) {
        case Kind::FirstPair: return "first";
        case Kind::LastPair: return "last";
        case Kind::LexMerge: return "lex";
        case Kind::SeededRandom: return "random:" + std::to_string(seed);
    }
    return "?";
}

GreedyResult run_greedy(const Dataset& d, const TieBreakPolicy& policy,
                        std::vector<StepStats>* stats) {
    return run(d, std::nullopt, policy, stats);
}

GreedyResult run_greedy_sharp(const Dataset& d, Symbol important, const TieBreakPolicy& policy,
                              std::vector<StepStats>* stats) {
    return run(d, important, policy, stats);
}

bool verify_trace(const Dataset& d, const GreedyResult& res) {
    const MergeTrace& trace = res.trace;
    std::size_t n = d.size();
    if (trace.steps.size() + 1 != n) return false;

    bool sharp = !trace.steps.empty() && trace.steps.front().sharp_len.has_value();
    auto metric = [&](const TraceStep& s) {
        return sharp ? *s.sharp_len : s.overlap_len;
    };

    std::optional<std::size_t> first_zero;
    std::vector<char> used_left(n, 0), used_right(n, 0);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        if (sharp != s.sharp_len.has_value()) return false;
        if (i > 0 && metric(trace.steps[i - 1]) < metric(s)) return false;
        if (metric(s) == 0 && !first_zero) first_zero = i + 1;
        if (first_zero && i + 1 >= *first_zero && metric(s) != 0) return false;
        if (metric(s) > 0) {
            if (used_left[s.left] || used_right[s.right]) return false;
            used_left[s.left] = used_right[s.right] = 1;
        }
    }
    if (trace.first_trivial != first_zero) return false;

    try {
        Replay r = replay(d, trace);
        return r.text == res.superstring && r.permutation == res.permutation;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::size_t replay_trace_length(const Dataset& d, const MergeTrace& trace) {
    return replay(d, trace).text.size();
}

}  // namespace scs
