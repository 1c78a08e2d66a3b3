#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace palfact {

// Palindromic tree over an append-only word.
//
// Node 0 is the imaginary root of length -1, node 1 the empty root; every
// other node stands for one distinct palindromic factor of the text so far.
// Suffix links point to the longest proper palindromic suffix; series links
// skip to the longest palindromic suffix whose length gap to its own suffix
// link differs, grouping suffix palindromes into arithmetic series. After
// add() the `longest_suffix` node names the longest palindromic suffix of
// the current text. Node count never exceeds text length + 2.
class Eertree {
public:
    explicit Eertree(std::size_t expected_length = 0);

    // Appends one letter and returns the longest-palindromic-suffix node.
    int add(char letter);

    int longest_suffix() const { return last_; }
    std::size_t text_length() const { return text_.size(); }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    int length(int v) const { return nodes_[v].len; }
    int suffix_link(int v) const { return nodes_[v].slink; }
    int series_link(int v) const { return nodes_[v].series; }
    // Length gap to the suffix link; equal gaps mark members of one series.
    int gap(int v) const { return nodes_[v].gap; }

    // Lengths of all palindromic suffixes of the current text, longest first.
    std::vector<int> palindromic_suffix_lengths() const;

private:
    struct Node {
        std::int32_t len;
        std::int32_t slink;
        std::int32_t series;
        std::int32_t gap;
    };

    int letter_id(char letter);
    std::int32_t transition(int v, int letter) const {
        return trans_[static_cast<std::size_t>(v) * stride_ + letter];
    }
    void set_transition(int v, int letter, std::int32_t to) {
        trans_[static_cast<std::size_t>(v) * stride_ + letter] = to;
    }
    int extend_chain(int v, char letter) const;

    std::vector<Node> nodes_;
    std::vector<std::int32_t> trans_;  // node_count * stride_, 0 = none
    std::array<std::int16_t, 256> letter_ids_;
    int sigma_ = 0;
    std::size_t stride_;
    std::string text_;
    int last_ = 1;
};

}  // namespace palfact
