#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace palfact {

// Letters are opaque single-byte tokens; built-in words use 'a'/'b'.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    bool contains(char letter) const;
    std::size_t size() const { return letters_.size(); }
    const std::string& letters() const { return letters_; }

    static Alphabet binary() { return Alphabet{"ab"}; }

private:
    std::string letters_;  // ordered, no duplicates
};

// Substitution mapping every alphabet letter to a nonempty image word over
// the same alphabet.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<std::pair<char, std::string>> rules);
    // Alphabet inferred from rule left-hand sides, in order of appearance.
    explicit Morphism(std::vector<std::pair<char, std::string>> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& image(char letter) const;
    const std::vector<std::pair<char, std::string>>& rules() const { return rules_; }

    // Common image length if the morphism is uniform, nullopt otherwise.
    std::optional<std::size_t> uniform_length() const;
    std::size_t max_image_length() const;
    // True when the image of `letter` starts with `letter` and has length >= 2,
    // so the fixed point starting at `letter` exists.
    bool prolongable_at(char letter) const;

private:
    Alphabet alphabet_;
    std::vector<std::pair<char, std::string>> rules_;
};

// Finite prefix of a (typically infinite) word. Letters are 1-based: w[1..n].
// Factors use the half-open convention w(i..j] = w[i+1..j], 0 <= i <= j <= n.
class WordPrefix {
public:
    WordPrefix() = default;
    explicit WordPrefix(std::string letters) : letters_(std::move(letters)) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // 1-based access, i in [1, length()].
    char at(std::size_t i) const;
    // w(i..j], empty when i == j.
    std::string_view factor(std::size_t i, std::size_t j) const;

    std::string_view view() const { return letters_; }
    operator std::string_view() const { return letters_; }
    const std::string& str() const { return letters_; }

private:
    std::string letters_;
};

inline constexpr std::size_t kDefaultPrefixBudget = 100'000'000;

// Image of w under m, letter by letter.
WordPrefix apply(const Morphism& m, const WordPrefix& w);

// First n letters of the fixed point of m starting with `start`. Intermediate
// generations are truncated, so memory stays within n plus one image length.
WordPrefix fixed_point_prefix(const Morphism& m, char start, std::size_t n,
                              std::size_t budget = kDefaultPrefixBudget);

// name is one of "thue-morse", "fibonacci", "period-doubling".
// period-doubling is the fixed point of a -> ab, b -> aa.
WordPrefix builtin_word(std::string_view name, std::size_t n);
const Morphism& builtin_morphism(std::string_view name);

bool is_palindrome(std::string_view w);

// One rule per line: `letter -> image`. Blank lines are ignored.
Morphism parse_morphism(std::string_view text);
Morphism load_morphism_file(const std::string& path);

}  // namespace palfact
