#pragma once

#include "scs/strcore.hpp"

namespace scs {

// The frequency metric: string "length" is the occurrence count of one
// designated important symbol.
struct SharpMetric {
    Symbol important;
};

// Puts one sentinel before every symbol of every string ("abc" -> "$a$b$c").
// The sentinel must be absent from d; the output is marked sentinel-in-use
// so a later disturbing step must pick a different one.
Dataset interleave_sentinel(const Dataset& d, Symbol sentinel);

// Replaces every occurrence of the important symbol with m copies of it.
// The output is re-verified substring-free.
Dataset inflate_important(const Dataset& d, Symbol important, std::size_t m);

// Occurrence count of the metric's important symbol in s.
std::size_t sharp_length(const SString& s, const SharpMetric& metric);

}  // namespace scs
