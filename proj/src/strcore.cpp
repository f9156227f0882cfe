#include "scs/strcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace scs {

namespace {

// Outside the unicode scalar range, so it never collides with input symbols.
constexpr char32_t kSeparator = 0x110000;

void check_permutation(const std::vector<int>& perm, std::size_t n) {
    if (perm.size() != n)
        throw std::invalid_argument("permutation size does not match dataset size");
    std::vector<char> seen(n, 0);
    for (int idx : perm) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[idx])
            throw std::invalid_argument("invalid permutation");
        seen[idx] = 1;
    }
}

}  // namespace

std::size_t overlap_len(const SString& s, const SString& t) {
    // Longest prefix of t that is a suffix of s: prefix function of t·SEP·s.
    SString w;
    w.reserve(t.size() + 1 + s.size());
    w += t;
    w += kSeparator;
    w += s;
    std::vector<std::size_t> pi(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    return pi.back();
}

SString overlap(const SString& s, const SString& t) {
    return t.substr(0, overlap_len(s, t));
}

SString merge(const SString& s, const SString& t) {
    std::size_t y = overlap_len(s, t);
    SString out = s;
    out.append(t, y, SString::npos);
    return out;
}

bool contains_substring(const SString& haystack, const SString& needle) {
    return haystack.find(needle) != SString::npos;
}

Dataset normalize(const std::vector<SString>& raw) {
    if (raw.empty()) throw std::invalid_argument("empty dataset");
    for (const SString& s : raw)
        if (s.empty()) throw std::invalid_argument("empty string in dataset");

    Dataset d;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool keep = true;
        // Drop raw[i] if it is a substring of any other raw string. Ties
        // between duplicates keep the first occurrence.
        for (std::size_t j = 0; j < raw.size() && keep; ++j) {
            if (i == j) continue;
            if (raw[i] == raw[j]) {
                if (j < i) keep = false;
            } else if (contains_substring(raw[j], raw[i])) {
                keep = false;
            }
        }
        if (keep) d.strings.push_back(raw[i]);
    }
    return d;
}

bool is_substring_free(const Dataset& d) {
    for (std::size_t i = 0; i < d.strings.size(); ++i)
        for (std::size_t j = 0; j < d.strings.size(); ++j)
            if (i != j && contains_substring(d.strings[j], d.strings[i])) return false;
    return true;
}

SString superstring_of_permutation(const Dataset& d, const std::vector<int>& perm) {
    check_permutation(perm, d.size());
    SString out = d.strings[perm[0]];
    for (std::size_t i = 1; i < perm.size(); ++i) out = merge(out, d.strings[perm[i]]);
    return out;
}

std::size_t superstring_length(const Dataset& d, const std::vector<int>& perm) {
    check_permutation(perm, d.size());
    std::size_t total = 0;
    for (const SString& s : d.strings) total += s.size();
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        total -= overlap_len(d.strings[perm[i]], d.strings[perm[i + 1]]);
    return total;
}

std::size_t count_symbol(const SString& s, Symbol c) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
}

}  // namespace scs
