// Acceptance suite: runs every pinned criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "palfact/ppl.hpp"
#include "palfact/regular.hpp"
#include "palfact/thue_morse.hpp"
#include "palfact/words.hpp"

using namespace palfact;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Harness {
    int failed = 0;

    void criterion(int id, const char* name, bool ok, const std::string& detail) {
        std::printf("[%s] %2d %-24s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
        if (!ok) {
            ++failed;
        }
    }
};

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", x);
    return buf;
}

}  // namespace

int main() {
    Harness harness;

    // Shared data: Thue-Morse prefix of length 1e5 + 1 and its PPL tables.
    const std::size_t kBig = 100'000;
    const WordPrefix big_word = builtin_word("thue-morse", kBig + 1);
    const auto fast_start = Clock::now();
    const PplTable fast_table = ppl_all(big_word.view());
    const double fast_elapsed = seconds_since(fast_start);

    {  // 1. PPL(1..16) golden table via all four algorithms, under one second.
        const auto start = Clock::now();
        const PplTable expected{0, 1, 2, 2, 1, 2, 3, 3, 2, 3, 4, 3, 2, 3, 3, 2, 1};
        const WordPrefix word = builtin_word("thue-morse", 16);
        bool ok = ppl_all(word.view()) == expected;
        ok = ok && ppl_all_naive(word.view()) == expected;
        const tm::LinearRepresentation rep = tm::build_representation();
        for (std::uint64_t n = 0; n <= 16; ++n) {
            ok = ok && tm::ppl(n) == expected[n];
            ok = ok && tm::eval(rep, n) == static_cast<std::int64_t>(expected[n]);
        }
        const double elapsed = seconds_since(start);
        ok = ok && elapsed < 1.0;
        harness.criterion(1, "golden-ppl-table", ok,
                          "four algorithms on n=1..16; " + format_double(elapsed) + " s");
    }

    {  // 2. SP(1..8) with base-4 renderings, exact.
        const unsigned golden[8] = {1, 2, 6, 10, 26, 90, 154, 410};
        const char* base4[8] = {"1", "2", "12", "22", "122", "1122", "2122", "12122"};
        bool ok = true;
        for (unsigned k = 1; k <= 8; ++k) {
            ok = ok && tm::sp(k) == golden[k - 1];
            ok = ok && tm::sp_quaternary(k) == base4[k - 1];
            ok = ok && tm::sp_quaternary(k) == tm::sp(k).get_str(4);
        }
        harness.criterion(2, "sp-golden", ok, "sp(1..8) and quaternary digits exact");
    }

    {  // 3. SP_2(2..5) golden, SP_2(1) infinite.
        const unsigned golden[4] = {2, 6, 22, 38};
        bool ok = !tm::sp2(1).has_value();
        for (unsigned k = 2; k <= 5; ++k) {
            ok = ok && tm::sp2(k).has_value() && *tm::sp2(k) == golden[k - 2];
        }
        harness.criterion(3, "sp2-golden", ok, "sp2(1) infinite, sp2(2..5) exact");
    }

    {  // 4. Fast, naive and closed-form agree on the 1e5 prefix.
        std::size_t mismatches = 0;
        const PplTable naive_table = ppl_all_naive(big_word.view());
        for (std::size_t i = 0; i <= kBig; ++i) {
            if (fast_table[i] != naive_table[i] || fast_table[i] != tm::ppl(i)) {
                ++mismatches;
            }
        }
        const bool ok = mismatches == 0 && fast_elapsed < 5.0;
        harness.criterion(4, "oracle-equivalence", ok,
                          std::to_string(mismatches) + " mismatches on n<=1e5; fast path " +
                              format_double(fast_elapsed) + " s");
    }

    {  // 5. sp/sp2 match the first table hits up to 1e5.
        constexpr std::size_t kUnset = SIZE_MAX;
        std::vector<std::size_t> first_single(64, kUnset), first_pair(64, kUnset);
        for (std::size_t n = 1; n <= kBig; ++n) {
            const std::uint32_t v = fast_table[n];
            if (v < 64 && first_single[v] == kUnset) {
                first_single[v] = n;
            }
            if (n + 1 <= kBig && fast_table[n + 1] == v && v < 64 && first_pair[v] == kUnset) {
                first_pair[v] = n;
            }
        }
        bool ok = first_pair[1] == kUnset;
        unsigned k_top = 0;
        for (unsigned k = 1;; ++k) {
            const mpz_class expected = tm::sp(k);
            if (expected > kBig) {
                break;
            }
            k_top = k;
            ok = ok && expected == static_cast<unsigned long>(first_single[k]);
            if (k >= 2) {
                ok = ok && *tm::sp2(k) == static_cast<unsigned long>(first_pair[k]);
            }
        }
        harness.criterion(5, "empirical-sp", ok,
                          "first hits match sp and sp2 for k<=" + std::to_string(k_top));
    }

    {  // 6. Difference prefix equals table differences and its own expansion.
        const tm::DiffSequence diffs = tm::diff_prefix(10'000);
        bool ok = diffs.size() == 10'000;
        for (std::size_t i = 0; i < diffs.size() && ok; ++i) {
            const tm::PplPair pair = tm::ppl_pair(i);
            ok = tm::to_int(diffs[i]) ==
                 static_cast<int>(pair.next) - static_cast<int>(pair.value);
        }
        const tm::DiffSequence seed = tm::diff_prefix(2'500);
        std::size_t at = 0;
        for (std::size_t s = 0; s < seed.size() && ok; ++s) {
            for (tm::DiffSymbol out : tm::delta_image(seed[s])) {
                ok = ok && diffs[at++] == out;
            }
        }
        harness.criterion(6, "difference-fixed-point", ok,
                          "diff(1e4) matches closed form and expands from diff(2500)");
    }

    {  // 7. Occurrence types and one-step extensions on the 4096 prefix.
        const WordPrefix word = builtin_word("thue-morse", 4098);
        const std::string_view full = word.view();
        const auto occurrences = palindromic_occurrences(full.substr(0, 4096));
        std::size_t type_violations = 0;
        std::size_t extension_violations = 0;
        for (const Occurrence& occ : occurrences) {
            const std::uint32_t len = occ.length();
            if (len != 1 && len != 3 && (occ.start + occ.end) % 4 != 0) {
                ++type_violations;
            }
            if ((occ.start + occ.end) % 4 == 0 && occ.start % 4 != 0 && occ.start > 0 &&
                full[occ.start - 1] != full[occ.end]) {
                ++extension_violations;
            }
        }
        const bool ok = type_violations == 0 && extension_violations == 0;
        harness.criterion(7, "occurrence-types", ok,
                          std::to_string(occurrences.size()) + " occurrences, " +
                              std::to_string(type_violations) + " type / " +
                              std::to_string(extension_violations) + " extension violations");
    }

    {  // 8. Optimal pieces of t(0..4N] stay on the 4-grid for 4N <= 2048.
        std::size_t violations = 0;
        const WordPrefix word = builtin_word("thue-morse", 2048);
        for (std::size_t len = 4; len <= 2048; len += 4) {
            for (const Occurrence& occ : optimal_piece_graph(word.view().substr(0, len))) {
                if (occ.start % 4 != 0 || occ.end % 4 != 0) {
                    ++violations;
                }
            }
        }
        harness.criterion(8, "zero-decomposition", violations == 0,
                          std::to_string(violations) + " off-grid pieces over 4N<=2048");
    }

    {  // 9. Matrix representation agrees everywhere tested; mutations are caught.
        const tm::LinearRepresentation rep = tm::build_representation();
        std::size_t mismatches = 0;
        for (std::uint64_t n = 0; n <= kBig; ++n) {
            if (tm::eval(rep, n) != static_cast<std::int64_t>(fast_table[n])) {
                ++mismatches;
            }
        }
        std::mt19937_64 rng(42);
        for (int round = 0; round < 1000; ++round) {
            const std::uint64_t n = rng() % 1'000'000'000'000'000'000ULL;
            if (tm::eval(rep, n) != static_cast<std::int64_t>(tm::ppl(n))) {
                ++mismatches;
            }
        }
        std::size_t undetected = 0;
        for (int b = 0; b < 4; ++b) {
            for (int row = 0; row < 4; ++row) {
                for (int col = 0; col < 4; ++col) {
                    tm::LinearRepresentation mutated = rep;
                    mutated.matrices[b][row][col] += 1;
                    if (tm::verify_representation(mutated, 4096).ok()) {
                        ++undetected;
                    }
                }
            }
        }
        const bool ok = mismatches == 0 && undetected == 0;
        harness.criterion(9, "matrix-representation", ok,
                          std::to_string(mismatches) + " mismatches; " +
                              std::to_string(undetected) + " of 64 mutations undetected");
    }

    {  // 10. limsup ratio: |k/ln sp(k) - 3/(4 ln 2)| <= 1e-2 at k = 60, and a
       //     monotonically shrinking envelope over k = 30..60.
        const double constant = tm::limsup_constant();
        const double at60 = tm::limsup_ratio(60);
        const double deviation = std::fabs(at60 - constant);
        const bool close_at_60 = deviation <= 1e-2;

        std::vector<double> err;
        for (unsigned k = 30; k <= 60; ++k) {
            err.push_back(std::fabs(tm::limsup_ratio(k) - constant));
        }
        bool envelope_ok = true;
        for (std::size_t i = 0; i + 3 < err.size(); ++i) {
            envelope_ok = envelope_ok && err[i + 3] < err[i];  // per residue class
        }
        auto window = [&](std::size_t i) {
            return std::max(err[i], std::max(err[i + 1], err[i + 2]));
        };
        for (std::size_t i = 0; i + 4 <= err.size(); ++i) {
            envelope_ok = envelope_ok && window(i + 1) <= window(i);
        }

        std::ostringstream detail;
        detail << "|" << format_double(at60) << " - " << format_double(constant)
               << "| = " << format_double(deviation) << (close_at_60 ? " <= " : " > ")
               << "0.01 at k=60; envelope over k=30..60 "
               << (envelope_ok ? "shrinks monotonically" : "does not shrink");
        harness.criterion(10, "limsup-convergence", close_at_60 && envelope_ok, detail.str());
    }

    {  // 11. Consecutive PPL values never differ by more than 1.
        std::mt19937 rng(2025);
        std::size_t violations = 0;
        auto scan = [&violations](const PplTable& table) {
            for (std::size_t i = 0; i + 1 < table.size(); ++i) {
                const int step = static_cast<int>(table[i + 1]) - static_cast<int>(table[i]);
                if (step < -1 || step > 1) {
                    ++violations;
                }
            }
        };
        for (int round = 0; round < 1000; ++round) {
            std::string w(1 + rng() % 500, 'a');
            for (char& c : w) {
                c = static_cast<char>('a' + rng() % 2);
            }
            scan(ppl_all(w));
        }
        scan(ppl_all(builtin_word("fibonacci", 10'000).view()));
        scan(ppl_all(builtin_word("period-doubling", 10'000).view()));
        harness.criterion(11, "gradient-bound", violations == 0,
                          std::to_string(violations) +
                              " jumps over 1000 random words and two morphic words");
    }

    if (harness.failed == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", harness.failed);
    }
    return harness.failed == 0 ? 0 : 1;
}
