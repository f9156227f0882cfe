#pragma once

#include <string>
#include <vector>

#include "scs/greedy.hpp"
#include "scs/io.hpp"
#include "scs/strcore.hpp"

namespace test_support {

// Independent quadratic oracle for overlap length: scan every candidate
// suffix/prefix length from the longest down.
inline std::size_t naive_overlap_len(const scs::SString& s, const scs::SString& t) {
    std::size_t max_len = std::min(s.size(), t.size());
    for (std::size_t len = max_len; len > 0; --len)
        if (s.compare(s.size() - len, len, t, 0, len) == 0) return len;
    return 0;
}

inline scs::SString random_string(scs::SplitMix64& rng, std::size_t len_max,
                                  std::size_t alphabet) {
    std::size_t len = 1 + rng.next() % len_max;
    scs::SString s;
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(static_cast<scs::Symbol>(U'a' + rng.next() % alphabet));
    return s;
}

inline std::string dump(const scs::Dataset& d) {
    std::string out = "dataset:";
    for (const scs::SString& s : d.strings) out += " " + scs::encode_utf8(s);
    return out;
}

}  // namespace test_support
