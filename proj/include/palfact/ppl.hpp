#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "palfact/words.hpp"

namespace palfact {

// values[i] is the palindromic length of the length-i prefix; values[0] == 0
// and consecutive entries never differ by more than 1.
using PplTable = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOracleBound = 200'000;
inline constexpr std::size_t kDefaultOccurrenceBound = std::size_t{1} << 14;

// Palindromic length of every prefix of w, via the palindromic tree with the
// series-link minimization. O(n log n).
PplTable ppl_all(std::string_view w);

// Independent quadratic-style oracle: per position, minimize over every
// palindromic suffix explicitly. Shares the tree construction with ppl_all
// but none of the minimization.
PplTable ppl_all_naive(std::string_view w, std::size_t bound = kDefaultOracleBound);

// Piece boundaries 0 = e_0 < e_1 < ... < e_k = n; piece i is w(e_{i-1}..e_i].
// The empty word decomposes into zero pieces.
struct PalindromicDecomposition {
    std::vector<std::size_t> bounds{0};

    std::size_t piece_count() const { return bounds.size() - 1; }
    std::vector<std::string_view> pieces(std::string_view w) const;
};

// A minimal decomposition; among optimal last pieces the shortest is chosen,
// so the result is deterministic.
PalindromicDecomposition optimal_decomposition(std::string_view w);

// Occurrence of the palindromic factor w(start..end].
struct Occurrence {
    std::uint32_t start;
    std::uint32_t end;

    std::uint32_t length() const { return end - start; }
    auto operator<=>(const Occurrence&) const = default;
};

// Every (i, j) with w(i..j] a nonempty palindrome, by center expansion,
// sorted by (start, end). The count may be quadratic in |w|.
std::vector<Occurrence> palindromic_occurrences(std::string_view w,
                                                std::size_t bound = kDefaultOccurrenceBound);

// Occurrences that appear in at least one optimal decomposition of the whole
// word: exactly those with forward[i] + 1 + backward[j] == forward[n].
std::vector<Occurrence> optimal_piece_graph(std::string_view w,
                                            std::size_t bound = kDefaultOccurrenceBound);

// CSV with header `n,ppl`; JSON lines of the form {"n":0,"ppl":0}.
void write_csv(std::ostream& os, const PplTable& table);
void write_jsonl(std::ostream& os, const PplTable& table);

}  // namespace palfact
