#include "scs/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "scs/disturb.hpp"
#include "scs/freq.hpp"
#include "scs/gen.hpp"
#include "scs/greedy.hpp"
#include "scs/io.hpp"
#include "scs/oracle.hpp"

namespace scs::verify {

namespace {

constexpr Symbol kSentinel = U'$';

std::string dump(const Dataset& d) {
    std::ostringstream out;
    out << "dataset:";
    for (const SString& s : d.strings) out << " " << encode_utf8(s);
    return out.str();
}

// Greedy trace + roles + disturbed dataset for the standard pipeline.
struct Disturbed {
    StepRoles roles;
    std::size_t m;
    Dataset d_prime;
};

Disturbed disturb_pipeline(const Dataset& d, std::size_t m) {
    GreedyResult res = run_greedy(d, TieBreakPolicy::first_pair());
    StepRoles roles = step_roles(res.trace, d.size());
    return {roles, m, disturb(d, roles, {m, kSentinel, DisturbVariant::Base})};
}

std::vector<TieBreakPolicy> all_policies() {
    return {TieBreakPolicy::first_pair(), TieBreakPolicy::last_pair(),
            TieBreakPolicy::lex_merge(), TieBreakPolicy::seeded_random(42)};
}

}  // namespace

std::vector<Dataset> make_corpus(std::size_t count, std::uint64_t seed0, std::size_t n_max,
                                 std::size_t len_max) {
    std::vector<Dataset> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 2 + i % (n_max - 1);
        std::size_t alphabet = 2 + i % 3;
        corpus.push_back(random_dataset(seed0 + i, n, 1, len_max, alphabet));
    }
    return corpus;
}

CheckOutcome predicted_overlap_exactness(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"predicted disturbed-overlap exactness"};
    for (const Dataset& d : corpus) {
        std::size_t n = d.size();
        if (n < 2) continue;
        Disturbed dist = disturb_pipeline(d, 2 * n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                std::size_t k = overlap_len(d.strings[i], d.strings[j]);
                std::size_t predicted = predicted_overlap_len(
                    k, dist.roles.alpha[j], dist.roles.beta[i], dist.roles.T, dist.m);
                std::size_t actual =
                    overlap_len(dist.d_prime.strings[i], dist.d_prime.strings[j]);
                ++out.checked;
                if (predicted != actual) {
                    out.ok = false;
                    std::ostringstream ce;
                    ce << dump(d) << " pair (" << i + 1 << "," << j + 1 << ") m " << dist.m
                       << " predicted " << predicted << " actual " << actual;
                    out.counterexample = ce.str();
                    return out;
                }
            }
        }
    }
    return out;
}

CheckOutcome overlap_order_preservation(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"disturbing preserves strict overlap order"};
    for (const Dataset& d : corpus) {
        std::size_t n = d.size();
        if (n < 2) continue;
        Disturbed dist = disturb_pipeline(d, 2 * n + 1);

        struct Pair {
            std::size_t src, dst;
        };
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    pairs.push_back({overlap_len(d.strings[i], d.strings[j]),
                                     overlap_len(dist.d_prime.strings[i], dist.d_prime.strings[j])});
        for (const Pair& a : pairs) {
            for (const Pair& b : pairs) {
                ++out.checked;
                if (a.src > b.src && a.dst <= b.dst) {
                    out.ok = false;
                    std::ostringstream ce;
                    ce << dump(d) << " source " << a.src << ">" << b.src << " disturbed " << a.dst
                       << "<=" << b.dst;
                    out.counterexample = ce.str();
                    return out;
                }
            }
        }
    }
    return out;
}

CheckOutcome policy_equivalence(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"policy equivalence on disturbed datasets"};
    for (const Dataset& d : corpus) {
        std::size_t n = d.size();
        if (n < 2) continue;
        Disturbed dist = disturb_pipeline(d, 2 * n + 1);

        std::vector<GreedyResult> runs;
        for (const TieBreakPolicy& p : all_policies())
            runs.push_back(run_greedy(dist.d_prime, p));

        bool bad = false;
        std::string why;
        for (std::size_t r = 1; r < runs.size() && !bad; ++r) {
            if (runs[r].superstring.size() != runs[0].superstring.size()) {
                bad = true;
                why = "final lengths differ";
            }
            if (runs[r].trace.first_trivial != runs[0].trace.first_trivial) {
                bad = true;
                why = "first trivial step differs";
            }
            std::size_t prefix = runs[0].trace.T() - 1;
            for (std::size_t t = 0; t < prefix && !bad; ++t) {
                const TraceStep& a = runs[0].trace.steps[t];
                const TraceStep& b = runs[r].trace.steps[t];
                if (a.left != b.left || a.right != b.right || a.overlap_len != b.overlap_len) {
                    bad = true;
                    why = "non-trivial trace prefix differs";
                }
            }
        }
        if (!bad && !check_tie_free(dist.d_prime)) {
            bad = true;
            why = "tie at a positive-maximum step";
        }
        ++out.checked;
        if (bad) {
            out.ok = false;
            out.counterexample = dump(d) + " m " + std::to_string(dist.m) + ": " + why;
            return out;
        }
    }
    return out;
}

CheckOutcome scale_bound(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"disturbed optimum scale bound |OPT(S') - (m+1)OPT(S)| <= 2n^2"};
    for (const Dataset& d : corpus) {
        std::size_t n = d.size();
        if (n < 2) continue;
        std::size_t opt = exact_scs(d).length;
        for (std::size_t m : {2 * n + 1, 10 * (2 * n + 1)}) {
            Disturbed dist = disturb_pipeline(d, m);
            std::size_t opt_prime = exact_scs(dist.d_prime).length;
            std::int64_t diff = static_cast<std::int64_t>(opt_prime) -
                                static_cast<std::int64_t>((m + 1) * opt);
            ++out.checked;
            if (std::llabs(diff) > static_cast<std::int64_t>(2 * n * n)) {
                out.ok = false;
                std::ostringstream ce;
                ce << dump(d) << " m " << m << " OPT(S') " << opt_prime << " (m+1)OPT(S) "
                   << (m + 1) * opt << " bound " << 2 * n * n;
                out.counterexample = ce.str();
                return out;
            }
        }
    }
    return out;
}

CheckOutcome family_ratios(std::size_t n_max) {
    CheckOutcome out{"worst-case family greedy 4n+2 vs optimal 2n+4"};
    Rational prev(0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Dataset d = worst_case_family(n);
        std::size_t opt = exact_scs(d).length;
        bool bad = opt != 2 * n + 4;
        for (const TieBreakPolicy& p : all_policies())
            bad = bad || run_greedy(d, p).superstring.size() != 4 * n + 2;
        Rational ratio = approx_ratio(4 * n + 2, 2 * n + 4);
        if (n == 2 && !(ratio == Rational(5, 4))) bad = true;
        if (!(prev < ratio) || !(ratio < Rational(2))) bad = true;
        prev = ratio;
        ++out.checked;
        if (bad) {
            out.ok = false;
            out.counterexample = "family n=" + std::to_string(n) + " opt " + std::to_string(opt) +
                                 " ratio " + ratio.str();
            return out;
        }
    }
    return out;
}

CheckOutcome sentinel_interleave_correspondence(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"sentinel interleaving maps plain length to sharp length"};
    for (const Dataset& d : corpus) {
        Dataset inter = interleave_sentinel(d, kSentinel);
        ++out.checked;
        std::size_t plain_opt = exact_scs(d).length;
        std::size_t sharp_opt = exact_scs_sharp(inter, kSentinel).sharp_length;
        bool bad = plain_opt != sharp_opt;
        std::string why = bad ? "optimum mismatch" : "";
        for (std::size_t i = 0; i < d.size() && !bad; ++i)
            for (std::size_t j = 0; j < d.size() && !bad; ++j) {
                if (i == j) continue;
                SString ov = overlap(inter.strings[i], inter.strings[j]);
                if (count_symbol(ov, kSentinel) !=
                    overlap_len(d.strings[i], d.strings[j])) {
                    bad = true;
                    why = "pairwise overlap mismatch";
                }
            }
        if (bad) {
            out.ok = false;
            out.counterexample = dump(d) + ": " + why;
            return out;
        }
    }
    return out;
}

CheckOutcome inflation_identity(const std::vector<Dataset>& corpus, Symbol important,
                                const std::vector<std::size_t>& ms, std::size_t min_datasets) {
    CheckOutcome out{"inflation identity |overlap(s_m,t_m)| = |overlap| + (m-1)|overlap|_#"};
    std::size_t used = 0;
    for (const Dataset& d : corpus) {
        bool has = false;
        for (const SString& s : d.strings) has = has || count_symbol(s, important) > 0;
        if (!has || d.size() < 2) continue;
        ++used;
        for (std::size_t m : ms) {
            Dataset infl = inflate_important(d, important, m);
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = 0; j < d.size(); ++j) {
                    if (i == j) continue;
                    SString ov = overlap(d.strings[i], d.strings[j]);
                    std::size_t expected = ov.size() + (m - 1) * count_symbol(ov, important);
                    std::size_t actual = overlap_len(infl.strings[i], infl.strings[j]);
                    ++out.checked;
                    if (expected != actual) {
                        out.ok = false;
                        std::ostringstream ce;
                        ce << dump(d) << " pair (" << i + 1 << "," << j + 1 << ") m " << m
                           << " expected " << expected << " actual " << actual;
                        out.counterexample = ce.str();
                        return out;
                    }
                }
        }
    }
    if (used < min_datasets) {
        out.ok = false;
        out.counterexample = "only " + std::to_string(used) +
                             " datasets contained the important symbol (need " +
                             std::to_string(min_datasets) + ")";
    }
    return out;
}

CheckOutcome sharp_order_lifting(const std::vector<Dataset>& corpus, Symbol important,
                                 std::size_t min_datasets) {
    CheckOutcome out{"sharp-greedy order is greedy for the inflated dataset"};
    std::size_t used = 0;
    for (const Dataset& d : corpus) {
        std::size_t n = d.size();
        if (n < 2) continue;
        ++used;
        GreedyResult sharp = run_greedy_sharp(d, important, TieBreakPolicy::first_pair());

        std::size_t max_overlap = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    max_overlap = std::max(max_overlap, overlap_len(d.strings[i], d.strings[j]));
        std::size_t m = 2 * max_overlap * n + 1;
        Dataset infl = inflate_important(d, important, m);

        // Replay the sharp merge order on the inflated dataset and demand
        // each chosen pair attains the maximum plain overlap at its step.
        struct Chain {
            std::vector<int> members;
            SString text;
        };
        std::vector<Chain> chains;
        for (std::size_t i = 0; i < n; ++i)
            chains.push_back({{static_cast<int>(i)}, infl.strings[i]});
        for (const TraceStep& step : sharp.trace.steps) {
            std::size_t a = chains.size(), b = chains.size();
            std::size_t best = 0;
            for (std::size_t x = 0; x < chains.size(); ++x) {
                if (chains[x].members.back() == step.left) a = x;
                if (chains[x].members.front() == step.right) b = x;
                for (std::size_t y = 0; y < chains.size(); ++y)
                    if (x != y)
                        best = std::max(best, overlap_len(chains[x].text, chains[y].text));
            }
            std::size_t chosen = overlap_len(chains[a].text, chains[b].text);
            ++out.checked;
            if (chosen != best) {
                out.ok = false;
                std::ostringstream ce;
                ce << dump(d) << " m " << m << " step (" << step.left + 1 << ","
                   << step.right + 1 << ") overlap " << chosen << " max " << best;
                out.counterexample = ce.str();
                return out;
            }
            chains[a].text = merge(chains[a].text, chains[b].text);
            chains[a].members.insert(chains[a].members.end(), chains[b].members.begin(),
                                     chains[b].members.end());
            chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(b));
        }
    }
    if (used < min_datasets) {
        out.ok = false;
        out.counterexample = "only " + std::to_string(used) + " usable datasets (need " +
                             std::to_string(min_datasets) + ")";
    }
    return out;
}

CheckOutcome oracle_equivalence(const std::vector<Dataset>& corpus) {
    CheckOutcome out{"exact solver agrees with brute-force permutation scan"};
    for (const Dataset& d : corpus) {
        if (d.size() > 8) continue;
        ++out.checked;
        std::size_t dp = exact_scs(d).length;
        std::size_t bf = brute_force_scs(d).length;
        if (dp != bf) {
            out.ok = false;
            out.counterexample =
                dump(d) + " dp " + std::to_string(dp) + " brute " + std::to_string(bf);
            return out;
        }
    }
    return out;
}

CheckOutcome gap_preservation() {
    CheckOutcome out{"disturbing preserves the greedy-vs-optimal gap (lambda = 1)"};
    for (std::size_t n : {2, 3}) {
        Dataset d = worst_case_family(n);
        GreedyResult res = run_greedy(d, TieBreakPolicy::first_pair());
        std::size_t m = choose_m_for_gap(d, res.trace, Rational(1));
        StepRoles roles = step_roles(res.trace, d.size());
        Dataset dist = disturb(d, roles, {m, fresh_sentinel(d), DisturbVariant::Base});
        std::size_t ga = run_greedy(dist, TieBreakPolicy::first_pair()).superstring.size();
        std::size_t opt = exact_scs(dist).length;
        ++out.checked;
        if (!(ga > opt)) {
            out.ok = false;
            out.counterexample = "family n=" + std::to_string(n) + " m " + std::to_string(m) +
                                 " GA(S') " + std::to_string(ga) + " OPT(S') " +
                                 std::to_string(opt);
            return out;
        }
    }
    return out;
}

std::string format_outcome(const CheckOutcome& outcome) {
    std::ostringstream out;
    out << (outcome.ok ? "PASS" : "FAIL") << "  " << outcome.name << " (" << outcome.checked
        << " cases)";
    if (!outcome.ok) out << "\n      counterexample: " << outcome.counterexample;
    return out.str();
}

}  // namespace scs::verify
