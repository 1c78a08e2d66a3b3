#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "palfact/ppl.hpp"
#include "palfact/report.hpp"
#include "palfact/words.hpp"

namespace palfact::tm {

// Closed-form machinery for the prefix palindromic length of the Thue-Morse
// word t (fixed point of a -> abba, b -> baab). Residue recurrences:
//
//   PPL(4n)     = PPL(n)
//   PPL(4n+1)   = PPL(n) + 1
//   PPL(4n+2)   = min(PPL(n), PPL(n+1)) + 2
//   PPL(4n+3)   = PPL(n+1) + 1
//
// with PPL(0) = 0, PPL(1) = 1. The pair (PPL(m), PPL(m+1)) is closed under
// m -> floor(m/4), which makes a single descent over base-4 digits possible.

// PPL at some index n together with the value at n + 1.
struct PplPair {
    std::uint64_t value = 0;
    std::uint64_t next = 1;
};

PplPair ppl_pair(std::uint64_t n);
PplPair ppl_pair(const mpz_class& n);
std::uint64_t ppl(std::uint64_t n);
std::uint64_t ppl(const mpz_class& n);

// First differences PPL(n+1) - PPL(n) live on a three-letter alphabet.
enum class DiffSymbol : std::int8_t { Down = -1, Flat = 0, Up = 1 };
using DiffSequence = std::vector<DiffSymbol>;

int to_int(DiffSymbol s);
char to_char(DiffSymbol s);        // '+', '0', '-'
DiffSymbol from_char(char c);

// 4-uniform image of one difference symbol; every image starts with Up and
// ends with Down.
std::array<DiffSymbol, 4> delta_image(DiffSymbol s);
// The same substitution over the letters {+, 0, -}.
const Morphism& delta_morphism();

// First n letters of the difference fixed point, starting with Up.
DiffSequence diff_prefix(std::size_t n);
std::string diff_prefix_string(std::size_t n);

// Length of the shortest prefix of palindromic length exactly k:
// 1, 2, 6, then sp(k+3) = 16 sp(k) - 6.
mpz_class sp(unsigned k);

// Least n with PPL(n) = PPL(n+1) = k; no such prefix exists for k = 1.
std::optional<mpz_class> sp2(unsigned k);

// Base-4 digits of sp(k), most significant first, by the closed form
// (12)^j 2 / 1(12)^(j-1) 2 / 2(12)^(j-1) 2 depending on k mod 3.
std::string sp_quaternary(unsigned k);

// k / ln(sp(k)); tends to limsup_constant() from above, monotonically within
// each residue class of k mod 3. Returns +infinity for k = 1.
double limsup_ratio(unsigned k);
double limsup_constant();  // 3 / (4 ln 2)

// Residues of the endpoints modulo 4.
std::pair<int, int> occurrence_type(const Occurrence& occ);

// Named checks run by verify_identities.
const std::vector<std::string>& identity_check_names();

// Machine-checks the closed forms and structure statements against the
// generic engine over the Thue-Morse prefix of length n_max:
//   closed-vs-generic     closed-form PPL equals the palindromic-tree table
//   occurrence-types      palindromes of length other than 1, 3 have i+j = 0 mod 4
//   palindrome-extension  off-grid even palindromes extend one letter each way
//   zero-decomposition    optimal pieces of t(0..4N] start and end at multiples of 4
//   difference-morphism   differences equal the delta fixed point, and expand under delta
//   sp-consistency        sp/sp2 match the first occurrences in the table
//   local-min-step        PPL(4N+m) = min of neighbours + 1 for m = 1, 2, 3
//   descent-at-multiples  PPL(4N-2) > PPL(4N)
//   gradient-bound        consecutive values differ by at most 1
//
// `checks` selects a subset by name (empty = all). Occurrence-based checks
// require n_max within the occurrence bound. zero-decomposition scans
// prefixes up to min(n_max, piece_graph_cap).
VerificationReport verify_identities(std::size_t n_max,
                                     const std::vector<std::string>& checks = {},
                                     std::size_t occurrence_bound = kDefaultOccurrenceBound,
                                     std::size_t piece_graph_cap = 2048);

}  // namespace palfact::tm
