#include "scs/freq.hpp"

#include <stdexcept>

namespace scs {

Dataset interleave_sentinel(const Dataset& d, Symbol sentinel) {
    Dataset out;
    out.sentinel = sentinel;
    out.sentinel_in_use = true;
    for (const SString& s : d.strings) {
        if (count_symbol(s, sentinel) > 0)
            throw std::invalid_argument("sentinel occurs in the dataset");
        SString t;
        t.reserve(2 * s.size());
        for (Symbol c : s) {
            t.push_back(sentinel);
            t.push_back(c);
        }
        out.strings.push_back(std::move(t));
    }
    return out;
}

Dataset inflate_important(const Dataset& d, Symbol important, std::size_t m) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    Dataset out;
    out.sentinel = d.sentinel;
    out.sentinel_in_use = d.sentinel_in_use;
    for (const SString& s : d.strings) {
        SString t;
        for (Symbol c : s) {
            if (c == important)
                t.append(m, c);
            else
                t.push_back(c);
        }
        out.strings.push_back(std::move(t));
    }
    if (!is_substring_free(out))
        throw std::runtime_error("inflated dataset is not substring-free");
    return out;
}

std::size_t sharp_length(const SString& s, const SharpMetric& metric) {
    return count_symbol(s, metric.important);
}

}  // namespace scs
