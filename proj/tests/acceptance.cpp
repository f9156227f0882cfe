// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <iostream>
#include <vector>

#include "scs/gen.hpp"
#include "scs/oracle.hpp"
#include "scs/verify.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int number, const scs::verify::CheckOutcome& outcome) {
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << outcome.name << " (" << outcome.checked << " cases)\n";
    if (!outcome.ok) {
        std::cout << "      counterexample: " << outcome.counterexample << "\n";
        ++failures;
    }
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main() {
    std::vector<scs::Dataset> corpus = scs::verify::make_corpus(1000, 1000);

    // 1. Predicted disturbed-overlap exactness, expected under 60 s.
    auto t0 = clock_type::now();
    scs::verify::CheckOutcome c1 = scs::verify::predicted_overlap_exactness(corpus);
    double elapsed = seconds_since(t0);
    if (c1.ok && elapsed >= 60.0) {
        c1.ok = false;
        c1.counterexample = "runtime " + std::to_string(elapsed) + " s exceeds 60 s";
    }
    report(1, c1);

    // 2. Strict overlap-order preservation at m = 2n+1.
    report(2, scs::verify::overlap_order_preservation(corpus));

    // 3. Tie-break policy equivalence plus tie-freeness on disturbed datasets.
    report(3, scs::verify::policy_equivalence(corpus));

    // 4. Disturbed optimum scale bound for m in {2n+1, 10(2n+1)}.
    report(4, scs::verify::scale_bound(corpus));

    // 5. Worst-case family closed forms and ratio behavior.
    report(5, scs::verify::family_ratios(6));

    // 6. Sentinel-interleaving correspondence on >= 500 datasets.
    std::vector<scs::Dataset> first500(corpus.begin(), corpus.begin() + 500);
    report(6, scs::verify::sentinel_interleave_correspondence(first500));

    // 7. Inflation identity for m in {2, 3, 10} on >= 500
    //    datasets containing the important symbol.
    report(7, scs::verify::inflation_identity(corpus, U'a', {2, 3, 10}, 500));

    // 8. Sharp-greedy order lifting on >= 200 datasets.
    std::vector<scs::Dataset> first250(corpus.begin(), corpus.begin() + 250);
    report(8, scs::verify::sharp_order_lifting(first250, U'a', 200));

    // 9. Oracle soundness: DP vs brute force on >= 500 datasets, and the
    //    DP finishes an n = 15 instance in under 10 s.
    scs::verify::CheckOutcome c9 = scs::verify::oracle_equivalence(first500);
    if (c9.ok && c9.checked < 500) {
        c9.ok = false;
        c9.counterexample = "only " + std::to_string(c9.checked) + " datasets checked";
    }
    if (c9.ok) {
        scs::Dataset big;
        for (std::uint64_t seed = 7; big.size() < 15; ++seed)
            big = scs::random_dataset(seed, 40, 8, 10, 3);
        big.strings.resize(15);
        t0 = clock_type::now();
        scs::exact_scs(big);
        double dp_time = seconds_since(t0);
        if (dp_time >= 10.0) {
            c9.ok = false;
            c9.counterexample = "n=15 DP took " + std::to_string(dp_time) + " s";
        }
    }
    report(9, c9);

    // 10. Gap preservation via choose_m_for_gap on the family, lambda = 1.
    report(10, scs::verify::gap_preservation());

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
