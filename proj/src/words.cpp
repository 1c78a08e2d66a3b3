#include "palfact/words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace palfact {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) {
        throw std::invalid_argument("alphabet must be nonempty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        for (std::size_t j = i + 1; j < letters_.size(); ++j) {
            if (letters_[i] == letters_[j]) {
                throw std::invalid_argument("alphabet has duplicate letter '" +
                                            std::string(1, letters_[i]) + "'");
            }
        }
    }
}

bool Alphabet::contains(char letter) const {
    return letters_.find(letter) != std::string::npos;
}

Morphism::Morphism(Alphabet alphabet, std::vector<std::pair<char, std::string>> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    for (char c : alphabet_.letters()) {
        auto it = std::find_if(rules_.begin(), rules_.end(),
                               [c](const auto& r) { return r.first == c; });
        if (it == rules_.end()) {
            throw std::invalid_argument("morphism is missing an image for '" +
                                        std::string(1, c) + "'");
        }
    }
    for (const auto& [letter, img] : rules_) {
        if (!alphabet_.contains(letter)) {
            throw std::invalid_argument("rule letter '" + std::string(1, letter) +
                                        "' is not in the alphabet");
        }
        if (img.empty()) {
            throw std::invalid_argument("image of '" + std::string(1, letter) +
                                        "' is empty");
        }
        if (std::count_if(rules_.begin(), rules_.end(),
                          [&, l = letter](const auto& r) { return r.first == l; }) != 1) {
            throw std::invalid_argument("duplicate rule for '" + std::string(1, letter) + "'");
        }
        for (char c : img) {
            if (!alphabet_.contains(c)) {
                throw std::invalid_argument("image of '" + std::string(1, letter) +
                                            "' uses '" + std::string(1, c) +
                                            "' which is not in the alphabet");
            }
        }
    }
}

namespace {
std::string rule_letters(const std::vector<std::pair<char, std::string>>& rules) {
    std::string letters;
    for (const auto& [letter, img] : rules) {
        (void)img;
        letters.push_back(letter);
    }
    return letters;
}
}  // namespace

Morphism::Morphism(std::vector<std::pair<char, std::string>> rules)
    : Morphism(Alphabet{rule_letters(rules)}, rules) {}

const std::string& Morphism::image(char letter) const {
    for (const auto& [l, img] : rules_) {
        if (l == letter) {
            return img;
        }
    }
    throw std::invalid_argument("letter '" + std::string(1, letter) +
                                "' is not in the alphabet");
}

std::optional<std::size_t> Morphism::uniform_length() const {
    std::size_t len = rules_.front().second.size();
    for (const auto& [l, img] : rules_) {
        (void)l;
        if (img.size() != len) {
            return std::nullopt;
        }
    }
    return len;
}

std::size_t Morphism::max_image_length() const {
    std::size_t len = 0;
    for (const auto& [l, img] : rules_) {
        (void)l;
        len = std::max(len, img.size());
    }
    return len;
}

bool Morphism::prolongable_at(char letter) const {
    if (!alphabet_.contains(letter)) {
        return false;
    }
    const std::string& img = image(letter);
    return img.size() >= 2 && img.front() == letter;
}

char WordPrefix::at(std::size_t i) const {
    if (i < 1 || i > letters_.size()) {
        throw std::out_of_range("letter index out of range");
    }
    return letters_[i - 1];
}

std::string_view WordPrefix::factor(std::size_t i, std::size_t j) const {
    if (i > j || j > letters_.size()) {
        throw std::out_of_range("factor bounds out of range");
    }
    return std::string_view(letters_).substr(i, j - i);
}

WordPrefix apply(const Morphism& m, const WordPrefix& w) {
    std::string out;
    out.reserve(w.length() * m.max_image_length());
    for (char c : w.str()) {
        out += m.image(c);  // throws for letters outside the alphabet
    }
    return WordPrefix{std::move(out)};
}

WordPrefix fixed_point_prefix(const Morphism& m, char start, std::size_t n,
                              std::size_t budget) {
    if (!m.alphabet().contains(start)) {
        throw std::invalid_argument("start letter '" + std::string(1, start) +
                                    "' is not in the alphabet");
    }
    if (!m.prolongable_at(start)) {
        throw std::invalid_argument("morphism is not prolongable at '" +
                                    std::string(1, start) + "'");
    }
    if (n > budget) {
        throw std::length_error("requested prefix exceeds the memory budget");
    }

    std::string cur(1, start);
    while (cur.size() < n) {
        std::string next;
        next.reserve(std::min(n + m.max_image_length(), cur.size() * m.max_image_length()));
        for (char c : cur) {
            next += m.image(c);
            if (next.size() >= n) {
                break;
            }
        }
        // Prolongability makes each generation strictly longer.
        if (next.size() <= cur.size()) {
            throw std::logic_error("fixed point generation stalled");
        }
        cur = std::move(next);
    }
    cur.resize(n);
    return WordPrefix{std::move(cur)};
}

const Morphism& builtin_morphism(std::string_view name) {
    // Square of the usual Thue-Morse morphism; both images are palindromes.
    static const Morphism thue_morse{{{'a', "abba"}, {'b', "baab"}}};
    static const Morphism fibonacci{{{'a', "ab"}, {'b', "a"}}};
    static const Morphism period_doubling{{{'a', "ab"}, {'b', "aa"}}};
    if (name == "thue-morse") {
        return thue_morse;
    }
    if (name == "fibonacci") {
        return fibonacci;
    }
    if (name == "period-doubling") {
        return period_doubling;
    }
    throw std::invalid_argument("unknown built-in word: " + std::string(name));
}

WordPrefix builtin_word(std::string_view name, std::size_t n) {
    return fixed_point_prefix(builtin_morphism(name), 'a', n);
}

bool is_palindrome(std::string_view w) {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
        if (w[i] != w[j - 1]) {
            return false;
        }
    }
    return true;
}

Morphism parse_morphism(std::string_view text) {
    std::vector<std::pair<char, std::string>> rules;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw std::invalid_argument("bad morphism rule (expected `letter -> image`): " + line);
        }
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        auto strip = [](std::string& s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
        };
        strip(lhs);
        strip(rhs);
        if (lhs.size() != 1 || rhs.empty()) {
            throw std::invalid_argument("bad morphism rule: " + line);
        }
        rules.emplace_back(lhs[0], rhs);
    }
    if (rules.empty()) {
        throw std::invalid_argument("morphism file has no rules");
    }
    return Morphism{std::move(rules)};
}

Morphism load_morphism_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open morphism file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_morphism(buf.str());
}

}  // namespace palfact
