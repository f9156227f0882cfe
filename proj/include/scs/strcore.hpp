#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scs {

// A symbol is a unicode scalar value; strings are immutable sequences of
// symbols. The alphabet is open: any scalar may appear, and a sentinel is
// whatever symbol the caller designates.
using Symbol = char32_t;
using SString = std::u32string;

// A substring-free, duplicate-free collection of non-empty strings plus
// sentinel metadata. `sentinel_in_use` marks post-transformation datasets
// whose strings legitimately contain the sentinel.
struct Dataset {
    std::vector<SString> strings;
    std::optional<Symbol> sentinel;
    bool sentinel_in_use = false;

    std::size_t size() const { return strings.size(); }
};

// Length of the longest y with s = xy and t = yz. Linear time via the
// prefix function of t·SEP·s where SEP is outside the scalar-value range.
std::size_t overlap_len(const SString& s, const SString& t);

// The longest y with s = xy and t = yz; may be empty.
SString overlap(const SString& s, const SString& t);

// The string xyz where y = overlap(s, t). s is a prefix and t is a suffix
// of the result; |result| = |s| + |t| - |overlap(s, t)|.
SString merge(const SString& s, const SString& t);

// True iff `needle` occurs in `haystack` as a contiguous substring.
bool contains_substring(const SString& haystack, const SString& needle);

// Drops every string that is a substring of another (duplicates keep the
// first occurrence) and preserves the relative order of survivors.
// Throws std::invalid_argument on an empty input.
Dataset normalize(const std::vector<SString>& raw);

// True iff no string of d is a substring of another.
bool is_substring_free(const Dataset& d);

// Left-fold merge of the strings in permutation order. `perm` is 0-based
// and must be a bijection on [0, n).
SString superstring_of_permutation(const Dataset& d, const std::vector<int>& perm);

// Sum of string lengths minus the sum of adjacent overlaps along `perm`.
// Equals |superstring_of_permutation(d, perm)|.
std::size_t superstring_length(const Dataset& d, const std::vector<int>& perm);

// Number of occurrences of c in s.
std::size_t count_symbol(const SString& s, Symbol c);

}  // namespace scs
