#include "palfact/thue_morse.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace palfact::tm {

namespace {

// Descent step: given (PPL(m), PPL(m+1)), produce the pair at n = 4m + r.
// Residue 3 lands on (PPL(4m+3), PPL(4(m+1))) = (PPL(m+1)+1, PPL(m+1)),
// so the pair state is closed under the descent.
PplPair descend(PplPair p, unsigned r) {
    switch (r) {
        case 0: return {p.value, p.value + 1};
        case 1: return {p.value + 1, std::min(p.value, p.next) + 2};
        case 2: return {std::min(p.value, p.next) + 2, p.next + 1};
        default: return {p.next + 1, p.next};
    }
}

DiffSymbol from_int(int d) {
    return static_cast<DiffSymbol>(d);
}

}  // namespace

PplPair ppl_pair(std::uint64_t n) {
    unsigned digits[32];
    int count = 0;
    for (; n != 0; n >>= 2) {
        digits[count++] = static_cast<unsigned>(n & 3);
    }
    PplPair pair;
    for (int i = count - 1; i >= 0; --i) {
        pair = descend(pair, digits[i]);
    }
    return pair;
}

PplPair ppl_pair(const mpz_class& n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("index must be nonnegative");
    }
    PplPair pair;
    if (sgn(n) == 0) {
        return pair;
    }
    const mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const mp_bitcnt_t digit_count = (bits + 1) / 2;
    for (mp_bitcnt_t i = digit_count; i-- > 0;) {
        const unsigned digit = mpz_tstbit(n.get_mpz_t(), 2 * i) |
                               (mpz_tstbit(n.get_mpz_t(), 2 * i + 1) << 1);
        pair = descend(pair, digit);
    }
    return pair;
}

std::uint64_t ppl(std::uint64_t n) {
    return ppl_pair(n).value;
}

std::uint64_t ppl(const mpz_class& n) {
    return ppl_pair(n).value;
}

int to_int(DiffSymbol s) {
    return static_cast<int>(s);
}

char to_char(DiffSymbol s) {
    switch (s) {
        case DiffSymbol::Up: return '+';
        case DiffSymbol::Flat: return '0';
        default: return '-';
    }
}

DiffSymbol from_char(char c) {
    switch (c) {
        case '+': return DiffSymbol::Up;
        case '0': return DiffSymbol::Flat;
        case '-': return DiffSymbol::Down;
        default: throw std::invalid_argument("difference symbols are +, 0, -");
    }
}

std::array<DiffSymbol, 4> delta_image(DiffSymbol s) {
    // From the residue recurrences: d(4n) = +1, d(4n+1) = min(0, d(n)) + 1,
    // d(4n+2) = max(0, d(n)) - 1, d(4n+3) = -1.
    const int d = to_int(s);
    return {from_int(1), from_int(std::min(0, d) + 1), from_int(std::max(0, d) - 1),
            from_int(-1)};
}

const Morphism& delta_morphism() {
    static const Morphism delta = [] {
        std::vector<std::pair<char, std::string>> rules;
        for (DiffSymbol s : {DiffSymbol::Up, DiffSymbol::Flat, DiffSymbol::Down}) {
            std::string image;
            for (DiffSymbol out : delta_image(s)) {
                image.push_back(to_char(out));
            }
            rules.emplace_back(to_char(s), image);
        }
        return Morphism{std::move(rules)};
    }();
    return delta;
}

std::string diff_prefix_string(std::size_t n) {
    return fixed_point_prefix(delta_morphism(), '+', n).str();
}

DiffSequence diff_prefix(std::size_t n) {
    const std::string chars = diff_prefix_string(n);
    DiffSequence out;
    out.reserve(chars.size());
    for (char c : chars) {
        out.push_back(from_char(c));
    }
    return out;
}

mpz_class sp(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("sp is defined for k >= 1");
    }
    mpz_class window[3] = {1, 2, 6};
    if (k <= 3) {
        return window[k - 1];
    }
    for (unsigned i = 4; i <= k; ++i) {
        mpz_class next = 16 * window[0] - 6;
        window[0] = window[1];
        window[1] = window[2];
        window[2] = next;
    }
    return window[2];
}

std::optional<mpz_class> sp2(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("sp2 is defined for k >= 1");
    }
    if (k == 1) {
        return std::nullopt;  // equal neighbouring values 1 never occur
    }
    return 4 * sp(k - 1) - 2;
}

std::string sp_quaternary(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("sp_quaternary is defined for k >= 1");
    }
    if (k == 1) {
        return "1";
    }
    std::string digits;
    auto repeat12 = [&digits](unsigned times) {
        for (unsigned i = 0; i < times; ++i) {
            digits += "12";
        }
    };
    switch (k % 3) {
        case 2:
            repeat12((k - 2) / 3);
            break;
        case 0:
            digits += '1';
            repeat12(k / 3 - 1);
            break;
        default:
            digits += '2';
            repeat12((k - 1) / 3 - 1);
            break;
    }
    digits += '2';
    return digits;
}

double limsup_ratio(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("limsup_ratio is defined for k >= 1");
    }
    if (k == 1) {
        return std::numeric_limits<double>::infinity();
    }
    const mpz_class value = sp(k);
    signed long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    const double log_value = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
    return static_cast<double>(k) / log_value;
}

double limsup_constant() {
    return 3.0 / (4.0 * std::log(2.0));
}

std::pair<int, int> occurrence_type(const Occurrence& occ) {
    return {static_cast<int>(occ.start % 4), static_cast<int>(occ.end % 4)};
}

namespace {

const std::vector<std::string> kCheckNames = {
    "closed-vs-generic",    "occurrence-types", "palindrome-extension",
    "zero-decomposition",   "difference-morphism", "sp-consistency",
    "local-min-step",       "descent-at-multiples", "gradient-bound",
};

class CheckRunner {
public:
    explicit CheckRunner(std::vector<std::string> selected) : selected_(std::move(selected)) {}

    bool wants(const std::string& name) const {
        return selected_.empty() ||
               std::find(selected_.begin(), selected_.end(), name) != selected_.end();
    }

    template <typename Body>
    void run(const std::string& name, std::uint64_t lo, std::uint64_t hi, Body&& body) {
        if (!wants(name)) {
            return;
        }
        CheckResult result;
        result.check = name;
        result.range_begin = lo;
        result.range_end = hi;
        const auto start = std::chrono::steady_clock::now();
        body(result.violations);
        result.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(result));
    }

    VerificationReport report;

private:
    std::vector<std::string> selected_;
};

}  // namespace

const std::vector<std::string>& identity_check_names() {
    return kCheckNames;
}

VerificationReport verify_identities(std::size_t n_max, const std::vector<std::string>& checks,
                                     std::size_t occurrence_bound, std::size_t piece_graph_cap) {
    for (const std::string& name : checks) {
        if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    CheckRunner runner(checks);
    const bool needs_occurrences = runner.wants("occurrence-types") ||
                                   runner.wants("palindrome-extension") ||
                                   runner.wants("zero-decomposition");
    if (needs_occurrences && n_max > occurrence_bound) {
        throw std::length_error("n_max exceeds the occurrence-enumeration bound");
    }

    // One extra letter so one-step extensions of occurrences can be tested.
    const WordPrefix word = builtin_word("thue-morse", n_max + 1);
    const std::string_view full = word.view();
    const std::string_view prefix = full.substr(0, n_max);
    const PplTable table = ppl_all(full);  // indices 0 .. n_max + 1

    runner.run("closed-vs-generic", 0, n_max, [&](auto& violations) {
        for (std::size_t i = 0; i <= n_max; ++i) {
            const PplPair pair = ppl_pair(i);
            if (pair.value != table[i] || pair.next != table[i + 1]) {
                violations.push_back({{"n", i},
                                      {"closed", pair.value},
                                      {"generic", table[i]}});
            }
        }
    });

    std::vector<Occurrence> occurrences;
    if (needs_occurrences) {
        occurrences = palindromic_occurrences(prefix, occurrence_bound);
    }

    runner.run("occurrence-types", 0, n_max, [&](auto& violations) {
        for (const Occurrence& occ : occurrences) {
            const std::uint32_t len = occ.length();
            if (len != 1 && len != 3 && (occ.start + occ.end) % 4 != 0) {
                violations.push_back({{"i", occ.start}, {"j", occ.end}, {"length", len}});
            }
        }
    });

    runner.run("palindrome-extension", 0, n_max, [&](auto& violations) {
        for (const Occurrence& occ : occurrences) {
            if ((occ.start + occ.end) % 4 != 0 || occ.start % 4 == 0 || occ.start == 0) {
                continue;
            }
            // w(i-1..j+1] is a palindrome iff the two added letters agree.
            if (full[occ.start - 1] != full[occ.end]) {
                violations.push_back({{"i", occ.start}, {"j", occ.end}});
            }
        }
    });

    const std::size_t graph_top = std::min(n_max, piece_graph_cap) & ~std::size_t{3};
    runner.run("zero-decomposition", 0, graph_top, [&](auto& violations) {
        std::vector<Occurrence> by_end(occurrences.begin(), occurrences.end());
        std::erase_if(by_end, [&](const Occurrence& occ) { return occ.end > graph_top; });
        std::sort(by_end.begin(), by_end.end(), [](const Occurrence& a, const Occurrence& b) {
            return a.end < b.end || (a.end == b.end && a.start < b.start);
        });
        std::size_t upper = 0;
        for (std::size_t len = 4; len <= graph_top; len += 4) {
            const std::string reversed(prefix.rend() - static_cast<std::ptrdiff_t>(len),
                                       prefix.rend());
            const PplTable backward = ppl_all(reversed);
            while (upper < by_end.size() && by_end[upper].end <= len) {
                ++upper;
            }
            for (std::size_t idx = 0; idx < upper; ++idx) {
                const Occurrence& occ = by_end[idx];
                if (table[occ.start] + 1 + backward[len - occ.end] != table[len]) {
                    continue;  // not part of any optimal decomposition
                }
                if (occ.start % 4 != 0 || occ.end % 4 != 0) {
                    violations.push_back({{"prefix", len}, {"i", occ.start}, {"j", occ.end}});
                }
            }
        }
    });

    runner.run("difference-morphism", 0, n_max, [&](auto& violations) {
        const DiffSequence diffs = diff_prefix(n_max);
        for (std::size_t i = 0; i < n_max; ++i) {
            const int expected = static_cast<int>(table[i + 1]) - static_cast<int>(table[i]);
            if (to_int(diffs[i]) != expected) {
                violations.push_back({{"n", i},
                                      {"difference", to_int(diffs[i])},
                                      {"table", expected}});
            }
        }
        const DiffSequence seed = diff_prefix(n_max / 4);
        std::size_t at = 0;
        for (DiffSymbol s : seed) {
            for (DiffSymbol out : delta_image(s)) {
                if (diffs[at] != out) {
                    violations.push_back({{"n", at}, {"expansion-mismatch", true}});
                }
                ++at;
            }
        }
    });

    runner.run("sp-consistency", 0, n_max, [&](auto& violations) {
        std::vector<std::size_t> first_single, first_pair;
        constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
        auto note = [kUnset](std::vector<std::size_t>& firsts, std::uint32_t k, std::size_t n) {
            if (firsts.size() <= k) {
                firsts.resize(k + 1, kUnset);
            }
            if (firsts[k] == kUnset) {
                firsts[k] = n;
            }
        };
        for (std::size_t n = 1; n <= n_max; ++n) {
            note(first_single, table[n], n);
            if (n + 1 <= n_max && table[n] == table[n + 1]) {
                note(first_pair, table[n], n);
            }
        }
        for (unsigned k = 1;; ++k) {
            const mpz_class expected = sp(k);
            if (expected > static_cast<unsigned long>(n_max)) {
                break;
            }
            const std::size_t found =
                k < first_single.size() ? first_single[k] : kUnset;
            if (found == kUnset || expected != static_cast<unsigned long>(found)) {
                violations.push_back({{"k", k}, {"kind", "sp"}, {"scan", found}});
            }
        }
        if (first_pair.size() > 1 && first_pair[1] != kUnset) {
            violations.push_back({{"k", 1}, {"kind", "sp2"}, {"scan", first_pair[1]}});
        }
        for (unsigned k = 2;; ++k) {
            const mpz_class expected = *sp2(k);
            if (n_max == 0 || expected > static_cast<unsigned long>(n_max - 1)) {
                break;
            }
            const std::size_t found = k < first_pair.size() ? first_pair[k] : kUnset;
            if (found == kUnset || expected != static_cast<unsigned long>(found)) {
                violations.push_back({{"k", k}, {"kind", "sp2"}, {"scan", found}});
            }
        }
    });

    runner.run("local-min-step", 0, n_max, [&](auto& violations) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (n % 4 == 0) {
                continue;
            }
            const std::uint32_t expected = std::min(table[n - 1], table[n + 1]) + 1;
            if (table[n] != expected) {
                violations.push_back({{"n", n}, {"value", table[n]}, {"expected", expected}});
            }
        }
    });

    runner.run("descent-at-multiples", 0, n_max, [&](auto& violations) {
        for (std::size_t n = 4; n <= n_max; n += 4) {
            if (!(table[n - 2] > table[n])) {
                violations.push_back({{"n", n}, {"at-minus-2", table[n - 2]}, {"at", table[n]}});
            }
        }
    });

    runner.run("gradient-bound", 0, n_max, [&](auto& violations) {
        for (std::size_t i = 0; i <= n_max; ++i) {
            const int step = static_cast<int>(table[i + 1]) - static_cast<int>(table[i]);
            if (step < -1 || step > 1) {
                violations.push_back({{"n", i}, {"step", step}});
            }
        }
    });

    return std::move(runner.report);
}

}  // namespace palfact::tm
