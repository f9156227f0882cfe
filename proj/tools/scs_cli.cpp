#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scs/disturb.hpp"
#include "scs/freq.hpp"
#include "scs/gen.hpp"
#include "scs/greedy.hpp"
#include "scs/io.hpp"
#include "scs/oracle.hpp"
#include "scs/verify.hpp"

namespace {

constexpr std::size_t kMCap = 100000;
constexpr std::size_t kTotalLengthCap = 10000;

scs::Symbol parse_symbol(const std::string& text) {
    scs::SString s = scs::decode_utf8(text);
    if (s.size() != 1) throw CLI::ValidationError("expected a single symbol, got: " + text);
    return s[0];
}

scs::Dataset load(const std::string& path) { return scs::read_dataset_file(path); }

void check_disturb_caps(const scs::Dataset& d, std::size_t m) {
    if (m > kMCap)
        throw CLI::ValidationError("m exceeds the cap of " + std::to_string(kMCap));
    std::size_t total = 0;
    for (const scs::SString& s : d.strings) total += s.size();
    if (total > kTotalLengthCap)
        throw CLI::ValidationError("total dataset length exceeds the cap of " +
                                   std::to_string(kTotalLengthCap));
}

void emit(const std::string& path, const scs::Dataset& d) {
    if (path.empty() || path == "-")
        scs::write_dataset(std::cout, d);
    else
        scs::write_dataset_file(path, d);
}

struct SeedRange {
    std::uint64_t lo = 1, hi = 100;
};

SeedRange parse_seed_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("expected a seed range like 1..100");
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy shortest-common-superstring toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a dataset");
    std::string family = "worst-case";
    std::size_t gen_n = 2, len_min = 3, len_max = 6, alphabet = 2, ov_len = 1;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--family", family, "worst-case|random|tie-rich")
        ->check(CLI::IsMember({"worst-case", "random", "tie-rich"}));
    gen->add_option("--n", gen_n, "family parameter / string count");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--len-min", len_min);
    gen->add_option("--len-max", len_max);
    gen->add_option("--alphabet", alphabet, "alphabet size (random family)");
    gen->add_option("--overlap-len", ov_len, "shared overlap length (tie-rich family)");
    gen->add_option("--output,-o", gen_out, "output path (default stdout)");

    // greedy / greedy-sharp
    auto* greedy = app.add_subcommand("greedy", "run the greedy algorithm");
    auto* greedy_sharp = app.add_subcommand("greedy-sharp", "run the frequency-greedy algorithm");
    std::string ds_path, policy_name = "first", important_text = "#";
    for (auto* cmd : {greedy, greedy_sharp}) {
        cmd->add_option("--dataset", ds_path, "dataset file")->required();
        cmd->add_option("--policy", policy_name, "first|last|lex|random:<seed>");
    }
    greedy_sharp->add_option("--important", important_text, "important symbol")->required();

    // disturb
    auto* disturb_cmd = app.add_subcommand("disturb", "apply the disturbing transformation");
    std::string dist_ds, dist_policy = "first", sentinel_text = "$", variant_name = "base";
    std::string dist_out, dist_report;
    std::size_t dist_m = 0;
    disturb_cmd->add_option("--dataset", dist_ds)->required();
    disturb_cmd->add_option("--policy", dist_policy, "first|last|lex|random:<seed>");
    disturb_cmd->add_option("--m", dist_m, "sentinel block size (0 = smallest legal)");
    disturb_cmd->add_option("--sentinel", sentinel_text, "sentinel symbol");
    disturb_cmd->add_option("--variant", variant_name, "base|append-one|scaled-tail")
        ->check(CLI::IsMember({"base", "append-one", "scaled-tail"}));
    disturb_cmd->add_option("--output,-o", dist_out, "disturbed dataset path")->required();
    disturb_cmd->add_option("--report", dist_report, "sidecar report path (default <output>.report)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact optimal superstring");
    std::string oracle_ds, oracle_important;
    std::size_t n_cap = scs::kDefaultOracleCap;
    oracle_cmd->add_option("--dataset", oracle_ds)->required();
    oracle_cmd->add_option("--important", oracle_important, "solve the frequency variant");
    oracle_cmd->add_option("--n-cap", n_cap, "exact solver size cap");

    // ratio
    auto* ratio_cmd = app.add_subcommand("ratio", "greedy-vs-optimal ratios for all policies");
    std::string ratio_ds;
    ratio_cmd->add_option("--dataset", ratio_ds)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the property-verification suite");
    std::string seeds_text = "1..100";
    std::size_t verify_n_max = 7;
    verify_cmd->add_option("--seeds", seeds_text, "seed range, e.g. 1..100");
    verify_cmd->add_option("--n-max", verify_n_max, "max strings per random dataset");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "timing of the solvers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            scs::Dataset d;
            if (family == "worst-case")
                d = scs::worst_case_family(gen_n);
            else if (family == "random")
                d = scs::random_dataset(gen_seed, gen_n, len_min, len_max, alphabet);
            else
                d = scs::tie_rich_dataset(gen_seed, gen_n, ov_len);
            std::size_t before = d.size();
            d = scs::normalize(d.strings);
            if (d.size() < before)
                std::cerr << "note: normalization dropped " << before - d.size()
                          << " string(s)\n";
            emit(gen_out, d);
        } else if (greedy->parsed()) {
            scs::GreedyResult res =
                scs::run_greedy(load(ds_path), scs::TieBreakPolicy::parse(policy_name));
            std::cout << scs::format_greedy_result(res);
        } else if (greedy_sharp->parsed()) {
            scs::Symbol important = parse_symbol(important_text);
            scs::GreedyResult res = scs::run_greedy_sharp(
                load(ds_path), important, scs::TieBreakPolicy::parse(policy_name));
            std::cout << scs::format_greedy_result(res);
            std::cout << "plain_length: " << res.superstring.size() << "\n";
            std::cout << "sharp_length: " << scs::count_symbol(res.superstring, important)
                      << "\n";
        } else if (disturb_cmd->parsed()) {
            scs::Dataset d = load(dist_ds);
            scs::DisturbVariant variant = variant_name == "base" ? scs::DisturbVariant::Base
                                          : variant_name == "append-one"
                                              ? scs::DisturbVariant::AppendOne
                                              : scs::DisturbVariant::ScaledTail;
            if (dist_m == 0) dist_m = scs::min_disturb_m(d.size(), variant);
            check_disturb_caps(d, dist_m);
            scs::GreedyResult res =
                scs::run_greedy(d, scs::TieBreakPolicy::parse(dist_policy));
            scs::StepRoles roles = scs::step_roles(res.trace, d.size());
            scs::DisturbParams params{dist_m, parse_symbol(sentinel_text), variant};
            scs::Dataset out = scs::disturb(d, roles, params);
            emit(dist_out, out);
            if (dist_report.empty()) dist_report = dist_out + ".report";
            std::ofstream report(dist_report);
            if (!report) throw std::runtime_error("cannot open " + dist_report);
            report << scs::format_disturb_report(d, out, roles, params);
        } else if (oracle_cmd->parsed()) {
            scs::Dataset d = load(oracle_ds);
            scs::ExactResult res =
                oracle_important.empty()
                    ? scs::exact_scs(d, n_cap)
                    : scs::exact_scs_sharp(d, parse_symbol(oracle_important), n_cap);
            std::cout << "length: " << res.length << "\n";
            if (!oracle_important.empty())
                std::cout << "sharp_length: " << res.sharp_length << "\n";
            std::cout << "permutation:";
            for (int idx : res.permutation) std::cout << " " << idx + 1;
            std::cout << "\n";
            std::cout << "superstring: " << scs::encode_utf8(res.superstring) << "\n";
        } else if (ratio_cmd->parsed()) {
            scs::Dataset d = load(ratio_ds);
            std::size_t opt = scs::exact_scs(d).length;
            for (const std::string& name :
                 {std::string("first"), std::string("last"), std::string("lex"),
                  std::string("random:42")}) {
                std::size_t ga =
                    scs::run_greedy(d, scs::TieBreakPolicy::parse(name)).superstring.size();
                std::cout << "policy " << name << ": greedy " << ga << ", opt " << opt
                          << ", ratio " << scs::approx_ratio(ga, opt).str() << "\n";
            }
        } else if (verify_cmd->parsed()) {
            SeedRange range = parse_seed_range(seeds_text);
            if (range.hi < range.lo) throw CLI::ValidationError("empty seed range");
            std::vector<scs::Dataset> corpus = scs::verify::make_corpus(
                range.hi - range.lo + 1, range.lo, verify_n_max);
            std::vector<scs::verify::CheckOutcome> outcomes = {
                scs::verify::predicted_overlap_exactness(corpus),
                scs::verify::overlap_order_preservation(corpus),
                scs::verify::policy_equivalence(corpus),
                scs::verify::sentinel_interleave_correspondence(corpus),
                scs::verify::inflation_identity(corpus, U'a', {2, 3, 10}, 0),
                scs::verify::sharp_order_lifting(corpus, U'a', 0),
                scs::verify::family_ratios(),
            };
            bool all_ok = true;
            for (const auto& o : outcomes) {
                std::cout << scs::verify::format_outcome(o) << "\n";
                all_ok = all_ok && o.ok;
            }
            return all_ok ? 0 : 1;
        } else if (bench_cmd->parsed()) {
            using clock = std::chrono::steady_clock;
            scs::Dataset big = scs::random_dataset(7, 40, 8, 10, 3);
            big.strings.resize(std::min<std::size_t>(big.size(), 15));
            auto t0 = clock::now();
            scs::exact_scs(big);
            auto t1 = clock::now();
            std::cout << "exact_scs n=" << big.size() << ": "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                      << " ms\n";
            scs::Dataset fam = scs::worst_case_family(6);
            t0 = clock::now();
            scs::run_greedy(fam, scs::TieBreakPolicy::first_pair());
            t1 = clock::now();
            std::cout << "greedy family n=6: "
                      << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
                      << " us\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
