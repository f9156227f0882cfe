#include "scs/gen.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "scs/greedy.hpp"

namespace scs {

Dataset worst_case_family(std::size_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    SString ab, ba;
    for (std::size_t i = 0; i < n; ++i) {
        ab += U"ab";
        ba += U"ba";
    }
    Dataset d;
    d.strings = {U"c" + ab, ab + U"c", ba};
    return d;
}

Dataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t len_min,
                       std::size_t len_max, std::size_t alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > 26)
        throw std::invalid_argument("alphabet_size must be in [1, 26]");
    if (len_min < 1 || len_max < len_min)
        throw std::invalid_argument("need 1 <= len_min <= len_max");
    if (n == 0) throw std::invalid_argument("n must be positive");

    // Count distinct strings in the length range, saturating.
    std::size_t distinct = 0;
    std::size_t pow = 1;
    const std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
    for (std::size_t len = 1; len <= len_max && distinct < cap; ++len) {
        pow = pow > cap / alphabet_size ? cap : pow * alphabet_size;
        if (len >= len_min) distinct = std::min(cap, distinct + pow);
    }
    if (n > distinct)
        throw std::invalid_argument("more distinct strings demanded than exist");

    SplitMix64 rng(seed);
    std::vector<SString> raw;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t len = len_min + rng.next() % (len_max - len_min + 1);
        SString s;
        for (std::size_t c = 0; c < len; ++c)
            s.push_back(static_cast<Symbol>(U'a' + rng.next() % alphabet_size));
        raw.push_back(std::move(s));
    }
    return normalize(raw);
}

Dataset tie_rich_dataset(std::uint64_t seed, std::size_t n, std::size_t overlap_len) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 4");
    if (overlap_len < 1)
        throw std::invalid_argument("overlap_len must be positive: ties among empty "
                                    "overlaps are not non-trivial");

    SString alphabet = U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::size_t per_pair = overlap_len + 2;
    if ((n / 2) * per_pair > alphabet.size())
        throw std::invalid_argument("alphabet exhausted for requested parameters");

    SplitMix64 rng(seed);
    for (std::size_t i = alphabet.size() - 1; i > 0; --i)
        std::swap(alphabet[i], alphabet[rng.next() % (i + 1)]);

    Dataset d;
    for (std::size_t p = 0; p < n / 2; ++p) {
        SString block = alphabet.substr(p * per_pair, per_pair);
        SString core = block.substr(0, overlap_len);
        d.strings.push_back(block.substr(overlap_len, 1) + core);
        d.strings.push_back(core + block.substr(overlap_len + 1, 1));
    }
    return d;
}

}  // namespace scs
