#include "scs/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scs {

std::string encode_utf8(Symbol c) {
    std::string out;
    std::uint32_t v = static_cast<std::uint32_t>(c);
    if (v < 0x80) {
        out.push_back(static_cast<char>(v));
    } else if (v < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (v >> 6)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (v >> 12)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x110000) {
        out.push_back(static_cast<char>(0xF0 | (v >> 18)));
        out.push_back(static_cast<char>(0x80 | ((v >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else {
        throw std::invalid_argument("symbol outside the unicode scalar range");
    }
    return out;
}

std::string encode_utf8(const SString& s) {
    std::string out;
    for (Symbol c : s) out += encode_utf8(c);
    return out;
}

SString decode_utf8(const std::string& bytes) {
    SString out;
    std::size_t i = 0;
    auto cont = [&](std::size_t k) {
        if (i + k >= bytes.size() || (static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80)
            throw std::invalid_argument("malformed UTF-8");
        return static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i + k]) & 0x3F);
    };
    while (i < bytes.size()) {
        unsigned char b = static_cast<unsigned char>(bytes[i]);
        std::uint32_t v;
        std::size_t len;
        if (b < 0x80) {
            v = b;
            len = 1;
        } else if ((b & 0xE0) == 0xC0) {
            v = (static_cast<std::uint32_t>(b & 0x1F) << 6) | cont(1);
            len = 2;
            if (v < 0x80) throw std::invalid_argument("overlong UTF-8");
        } else if ((b & 0xF0) == 0xE0) {
            v = (static_cast<std::uint32_t>(b & 0x0F) << 12) | (cont(1) << 6) | cont(2);
            len = 3;
            if (v < 0x800) throw std::invalid_argument("overlong UTF-8");
        } else if ((b & 0xF8) == 0xF0) {
            v = (static_cast<std::uint32_t>(b & 0x07) << 18) | (cont(1) << 12) | (cont(2) << 6) |
                cont(3);
            len = 4;
            if (v < 0x10000 || v > 0x10FFFF) throw std::invalid_argument("invalid UTF-8");
        } else {
            throw std::invalid_argument("malformed UTF-8");
        }
        if (v >= 0xD800 && v <= 0xDFFF) throw std::invalid_argument("surrogate in UTF-8");
        out.push_back(static_cast<Symbol>(v));
        i += len;
    }
    return out;
}

namespace {

constexpr const char* kDirectivePrefix = "#! sentinel=";

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Dataset read_dataset(std::istream& in) {
    Dataset d;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (first && line.rfind(kDirectivePrefix, 0) == 0) {
            std::string rest = line.substr(std::string(kDirectivePrefix).size());
            auto space = rest.find(' ');
            if (space == std::string::npos || rest.substr(space + 1) != "in-use")
                throw std::invalid_argument("malformed dataset directive: " + line);
            SString sym = decode_utf8(rest.substr(0, space));
            if (sym.size() != 1)
                throw std::invalid_argument("sentinel must be a single symbol");
            d.sentinel = sym[0];
            d.sentinel_in_use = true;
            first = false;
            continue;
        }
        first = false;
        if (line.empty()) throw std::invalid_argument("blank line in dataset file");
        d.strings.push_back(decode_utf8(line));
    }
    if (d.strings.empty()) throw std::invalid_argument("empty dataset");
    return d;
}

Dataset read_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dataset(in);
}

void write_dataset(std::ostream& out, const Dataset& d) {
    if (d.sentinel && d.sentinel_in_use)
        out << kDirectivePrefix << encode_utf8(*d.sentinel) << " in-use\n";
    for (const SString& s : d.strings) out << encode_utf8(s) << "\n";
}

void write_dataset_file(const std::string& path, const Dataset& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_dataset(out, d);
}

std::string format_greedy_result(const GreedyResult& res) {
    std::ostringstream out;
    out << "superstring: " << encode_utf8(res.superstring) << "\n";
    out << "permutation:";
    for (int idx : res.permutation) out << " " << idx + 1;
    out << "\n";
    out << "first_trivial: ";
    if (res.trace.first_trivial)
        out << *res.trace.first_trivial;
    else
        out << "none";
    out << "\n";
    out << "steps: " << res.trace.steps.size() << "\n";
    for (const TraceStep& s : res.trace.steps) {
        out << "step: " << s.left + 1 << " " << s.right + 1 << " " << s.overlap_len;
        if (s.sharp_len) out << " " << *s.sharp_len;
        out << "\n";
    }
    return out.str();
}

std::string format_disturb_report(const Dataset& source, const Dataset& disturbed,
                                  const StepRoles& roles, const DisturbParams& params) {
    std::ostringstream out;
    out << "m: " << params.m << "\n";
    out << "T: " << roles.T << "\n";
    out << "sentinel: " << encode_utf8(params.sentinel) << "\n";
    out << "alpha:";
    for (std::size_t a : roles.alpha) out << " " << a;
    out << "\n";
    out << "beta:";
    for (std::size_t b : roles.beta) out << " " << b;
    out << "\n";
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (std::size_t j = 0; j < source.size(); ++j) {
            if (i == j) continue;
            std::size_t k = overlap_len(source.strings[i], source.strings[j]);
            std::size_t predicted = predicted_overlap_len_variant(
                k, roles.alpha[j], roles.beta[i], roles.T, params.m, source.size(),
                params.variant);
            std::size_t actual = overlap_len(disturbed.strings[i], disturbed.strings[j]);
            out << "overlap: " << i + 1 << " " << j + 1 << " source " << k << " predicted "
                << predicted << " actual " << actual << "\n";
        }
    }
    return out.str();
}

}  // namespace scs
