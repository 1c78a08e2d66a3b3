#include "palfact/eertree.hpp"

namespace palfact {

Eertree::Eertree(std::size_t expected_length) : stride_(4) {
    letter_ids_.fill(-1);
    nodes_.reserve(expected_length + 2);
    trans_.reserve((expected_length + 2) * stride_);
    text_.reserve(expected_length);
    // Roots carry gap 0 so that length-1 palindromes open their own series.
    nodes_.push_back({-1, 0, 0, 0});
    nodes_.push_back({0, 0, 1, 0});
    trans_.assign(2 * stride_, 0);
}

int Eertree::letter_id(char letter) {
    std::int16_t& id = letter_ids_[static_cast<unsigned char>(letter)];
    if (id >= 0) {
        return id;
    }
    id = static_cast<std::int16_t>(sigma_++);
    if (static_cast<std::size_t>(sigma_) > stride_) {
        // Re-stride the transition table; happens at most a few times.
        std::size_t new_stride = stride_ * 2;
        std::vector<std::int32_t> wide(nodes_.size() * new_stride, 0);
        for (std::size_t v = 0; v < nodes_.size(); ++v) {
            for (std::size_t c = 0; c < stride_; ++c) {
                wide[v * new_stride + c] = trans_[v * stride_ + c];
            }
        }
        trans_ = std::move(wide);
        stride_ = new_stride;
    }
    return id;
}

// Walks suffix links from v to the first node whose palindrome, extended by
// `letter` on both sides, fits the current text end.
int Eertree::extend_chain(int v, char letter) const {
    const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(text_.size()) - 1;
    for (;;) {
        const std::ptrdiff_t mirror = pos - nodes_[v].len - 1;
        // The imaginary root mirrors onto pos itself and always matches.
        if (mirror >= 0 && text_[static_cast<std::size_t>(mirror)] == letter) {
            return v;
        }
        v = nodes_[v].slink;
    }
}

int Eertree::add(char letter) {
    text_.push_back(letter);
    const int c = letter_id(letter);

    const int attach = extend_chain(last_, letter);
    if (std::int32_t to = transition(attach, c); to != 0) {
        last_ = to;
        return last_;
    }

    Node node;
    node.len = nodes_[attach].len + 2;
    if (node.len == 1) {
        node.slink = 1;
    } else {
        node.slink = transition(extend_chain(nodes_[attach].slink, letter), c);
    }
    node.gap = node.len - nodes_[node.slink].len;
    node.series = (node.gap == nodes_[node.slink].gap) ? nodes_[node.slink].series
                                                       : node.slink;

    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    trans_.resize(trans_.size() + stride_, 0);
    set_transition(attach, c, id);
    last_ = id;
    return last_;
}

std::vector<int> Eertree::palindromic_suffix_lengths() const {
    std::vector<int> lengths;
    for (int v = last_; nodes_[v].len > 0; v = nodes_[v].slink) {
        lengths.push_back(nodes_[v].len);
    }
    return lengths;
}

}  // namespace palfact
