#include "scs/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace scs {

namespace {

struct Val {
    std::int64_t primary;
    std::int64_t secondary;

    bool operator<(const Val& o) const {
        return primary != o.primary ? primary < o.primary : secondary < o.secondary;
    }
};

// Held-Karp over (visited set, last string), maximizing total edge weight
// lexicographically: (primary, secondary). Minimizing superstring length is
// maximizing total overlap along the permutation.
std::vector<int> best_path(const std::vector<std::vector<Val>>& w) {
    std::size_t n = w.size();
    std::size_t full = std::size_t{1} << n;
    const Val kNone{-1, -1};

    std::vector<std::vector<Val>> dp(full, std::vector<Val>(n, kNone));
    std::vector<std::vector<std::int8_t>> parent(full, std::vector<std::int8_t>(n, -1));
    for (std::size_t i = 0; i < n; ++i) dp[std::size_t{1} << i][i] = {0, 0};

    for (std::size_t mask = 1; mask < full; ++mask) {
        for (std::size_t last = 0; last < n; ++last) {
            if (!(mask & (std::size_t{1} << last))) continue;
            const Val& cur = dp[mask][last];
            if (cur.primary < 0) continue;
            for (std::size_t next = 0; next < n; ++next) {
                if (mask & (std::size_t{1} << next)) continue;
                std::size_t nmask = mask | (std::size_t{1} << next);
                Val cand{cur.primary + w[last][next].primary,
                         cur.secondary + w[last][next].secondary};
                if (dp[nmask][next] < cand) {
                    dp[nmask][next] = cand;
                    parent[nmask][next] = static_cast<std::int8_t>(last);
                }
            }
        }
    }

    std::size_t best_last = 0;
    for (std::size_t last = 1; last < n; ++last)
        if (dp[full - 1][best_last] < dp[full - 1][last]) best_last = last;

    std::vector<int> perm;
    std::size_t mask = full - 1, last = best_last;
    while (true) {
        perm.push_back(static_cast<int>(last));
        std::int8_t p = parent[mask][last];
        if (p < 0) break;
        mask ^= std::size_t{1} << last;
        last = static_cast<std::size_t>(p);
    }
    std::reverse(perm.begin(), perm.end());
    return perm;
}

ExactResult result_from_perm(const Dataset& d, std::vector<int> perm) {
    ExactResult res;
    res.superstring = superstring_of_permutation(d, perm);
    res.length = res.superstring.size();
    res.permutation = std::move(perm);
    return res;
}

}  // namespace

ExactResult exact_scs(const Dataset& d, std::size_t n_cap) {
    std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("empty dataset");
    if (n > n_cap)
        throw std::invalid_argument("dataset too large for exact solver (n > " +
                                    std::to_string(n_cap) + "); see brute_force_scs limits");

    std::vector<std::vector<Val>> w(n, std::vector<Val>(n, {0, 0}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                w[i][j] = {static_cast<std::int64_t>(overlap_len(d.strings[i], d.strings[j])), 0};

    return result_from_perm(d, best_path(w));
}

ExactResult brute_force_scs(const Dataset& d) {
    std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("empty dataset");
    if (n > 8) throw std::invalid_argument("brute_force_scs requires n <= 8");

    std::vector<int> perm(n), best;
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    std::size_t best_len = 0;
    do {
        std::size_t len = superstring_length(d, perm);
        if (best.empty() || len < best_len) {
            best = perm;
            best_len = len;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return result_from_perm(d, std::move(best));
}

ExactResult exact_scs_sharp(const Dataset& d, Symbol important, std::size_t n_cap) {
    std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("empty dataset");
    if (n > n_cap)
        throw std::invalid_argument("dataset too large for exact solver (n > " +
                                    std::to_string(n_cap) + ")");

    // Edge weight: (important-count of the overlap, plain overlap length).
    // The secondary component makes the result plain-minimal among
    // sharp-optimal permutations.
    std::vector<std::vector<Val>> w(n, std::vector<Val>(n, {0, 0}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                SString ov = overlap(d.strings[i], d.strings[j]);
                w[i][j] = {static_cast<std::int64_t>(count_symbol(ov, important)),
                           static_cast<std::int64_t>(ov.size())};
            }

    ExactResult res = result_from_perm(d, best_path(w));
    res.sharp_length = count_symbol(res.superstring, important);
    return res;
}

Rational approx_ratio(std::size_t algorithm_length, std::size_t opt_length) {
    if (opt_length == 0) throw std::invalid_argument("undefined ratio: optimum has length 0");
    return Rational(static_cast<std::int64_t>(algorithm_length),
                    static_cast<std::int64_t>(opt_length));
}

}  // namespace scs
