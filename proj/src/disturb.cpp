#include "scs/disturb.hpp"

#include <algorithm>
#include <stdexcept>

namespace scs {

StepRoles step_roles(const MergeTrace& trace, std::size_t n) {
    std::size_t T = trace.T();
    StepRoles roles{std::vector<std::size_t>(n, T), std::vector<std::size_t>(n, T), T};
    for (std::size_t t = 1; t <= trace.steps.size() && t < T; ++t) {
        const TraceStep& step = trace.steps[t - 1];
        roles.beta[static_cast<std::size_t>(step.left)] = t;
        roles.alpha[static_cast<std::size_t>(step.right)] = t;
    }
    return roles;
}

std::size_t min_disturb_m(std::size_t n, DisturbVariant variant) {
    return variant == DisturbVariant::ScaledTail ? 2 * n * (n + 1) + 1 : 2 * n + 1;
}

Dataset disturb(const Dataset& d, const StepRoles& roles, const DisturbParams& params) {
    std::size_t n = d.size();
    if (roles.alpha.size() != n || roles.beta.size() != n)
        throw std::invalid_argument("roles do not match dataset size");
    if (params.m < min_disturb_m(n, params.variant))
        throw std::invalid_argument("m too small: need m >= " +
                                    std::to_string(min_disturb_m(n, params.variant)));
    for (const SString& s : d.strings)
        if (count_symbol(s, params.sentinel) > 0)
            throw std::invalid_argument("sentinel occurs in the dataset");

    Dataset out;
    out.sentinel = params.sentinel;
    out.sentinel_in_use = true;
    for (std::size_t i = 0; i < n; ++i) {
        const SString& s = d.strings[i];
        std::size_t tail = roles.T - roles.beta[i];
        if (params.variant == DisturbVariant::ScaledTail) tail *= n;

        SString t;
        t.append(params.m - roles.alpha[i], params.sentinel);
        for (std::size_t c = 0; c < s.size(); ++c) {
            if (c > 0) t.append(params.m, params.sentinel);
            t.push_back(s[c]);
        }
        t.append(tail, params.sentinel);
        if (params.variant == DisturbVariant::AppendOne) t.push_back(params.sentinel);
        out.strings.push_back(std::move(t));
    }

    if (!is_substring_free(out))
        throw std::runtime_error("disturbed dataset is not substring-free");
    return out;
}

std::size_t predicted_overlap_len(std::size_t k, std::size_t alpha_j, std::size_t beta_i,
                                  std::size_t T, std::size_t m) {
    if (k > 0) return (m + 1) * k - alpha_j + T - beta_i;
    return std::min(T - beta_i, m - alpha_j);
}

std::size_t predicted_overlap_len_variant(std::size_t k, std::size_t alpha_j, std::size_t beta_i,
                                          std::size_t T, std::size_t m, std::size_t n,
                                          DisturbVariant variant) {
    switch (variant) {
        case DisturbVariant::Base:
            return predicted_overlap_len(k, alpha_j, beta_i, T, m);
        case DisturbVariant::AppendOne:
            if (k > 0) return (m + 1) * k - alpha_j + T - beta_i + 1;
            return std::min(T - beta_i + 1, m - alpha_j);
        case DisturbVariant::ScaledTail:
            if (k > 0) return (m + 1) * k - alpha_j + n * (T - beta_i);
            return std::min(n * (T - beta_i), m - alpha_j);
    }
    throw std::logic_error("unreachable");
}

bool check_tie_free(const Dataset& d_prime) {
    std::vector<StepStats> stats;
    run_greedy(d_prime, TieBreakPolicy::first_pair(), &stats);
    for (const StepStats& s : stats)
        if (s.max_overlap > 0 && s.tied_pairs != 1) return false;
    return true;
}

Symbol fresh_sentinel(const Dataset& d) {
    for (Symbol cand : {U'$', U'#', U'%', U'@'}) {
        bool used = false;
        for (const SString& s : d.strings) used = used || count_symbol(s, cand) > 0;
        if (!used) return cand;
    }
    // Scan upward from a private-use codepoint.
    for (Symbol cand = 0xE000;; ++cand) {
        bool used = false;
        for (const SString& s : d.strings) used = used || count_symbol(s, cand) > 0;
        if (!used) return cand;
    }
}

std::size_t choose_m_for_gap(const Dataset& d, const MergeTrace& trace_b, const Rational& lambda,
                             std::size_t m_cap) {
    std::size_t n = d.size();
    std::size_t greedy_len = replay_trace_length(d, trace_b);
    std::size_t opt_len = exact_scs(d).length;
    auto exceeds = [&lambda](std::size_t alg, std::size_t opt) {
        // alg > lambda * opt, in exact arithmetic
        return static_cast<std::int64_t>(alg) * lambda.den >
               lambda.num * static_cast<std::int64_t>(opt);
    };
    if (!exceeds(greedy_len, opt_len)) throw std::invalid_argument("no gap to preserve");

    StepRoles roles = step_roles(trace_b, n);
    Symbol sentinel = fresh_sentinel(d);
    for (std::size_t m = 2 * n + 1; m <= m_cap; m *= 2) {
        Dataset dist = disturb(d, roles, {m, sentinel, DisturbVariant::Base});
        std::size_t ga = run_greedy(dist, TieBreakPolicy::first_pair()).superstring.size();
        std::size_t opt = exact_scs(dist).length;
        if (exceeds(ga, opt)) return m;
    }
    throw std::runtime_error(
        "no gap-preserving m found up to cap " + std::to_string(m_cap) + " (n = " +
        std::to_string(n) + ", source gap " + std::to_string(greedy_len) + " vs opt " +
        std::to_string(opt_len) + ")");
}

}  // namespace scs
