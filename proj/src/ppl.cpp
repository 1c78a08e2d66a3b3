#include "palfact/ppl.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "palfact/eertree.hpp"

namespace palfact {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;

struct EngineRun {
    Eertree tree;
    PplTable dp;
    std::vector<std::int32_t> suffix_node;  // longest palindromic suffix per prefix
};

// One pass of the series-link DP. For a node v, series_dp[v] holds the best
// dp value over the arithmetic series of suffix palindromes ending at v; the
// shortest member of the series has length gap(v) + length(series_link(v)).
EngineRun run_engine(std::string_view w, bool keep_positions) {
    EngineRun run{Eertree(w.size()), PplTable(w.size() + 1, kInf), {}};
    if (keep_positions) {
        run.suffix_node.assign(w.size() + 1, 1);
    }
    run.dp[0] = 0;
    std::vector<std::uint32_t> series_dp(2, kInf);

    for (std::size_t i = 1; i <= w.size(); ++i) {
        run.tree.add(w[i - 1]);
        series_dp.resize(static_cast<std::size_t>(run.tree.node_count()), kInf);
        if (keep_positions) {
            run.suffix_node[i] = run.tree.longest_suffix();
        }
        for (int v = run.tree.longest_suffix(); run.tree.length(v) > 0;
             v = run.tree.series_link(v)) {
            const int shortest = run.tree.length(run.tree.series_link(v)) + run.tree.gap(v);
            std::uint32_t best = run.dp[i - static_cast<std::size_t>(shortest)];
            if (run.tree.gap(v) == run.tree.gap(run.tree.suffix_link(v))) {
                best = std::min(best, series_dp[static_cast<std::size_t>(run.tree.suffix_link(v))]);
            }
            series_dp[static_cast<std::size_t>(v)] = best;
            run.dp[i] = std::min(run.dp[i], best + 1);
        }
    }
    return run;
}

}  // namespace

PplTable ppl_all(std::string_view w) {
    return run_engine(w, false).dp;
}

PplTable ppl_all_naive(std::string_view w, std::size_t bound) {
    if (w.size() > bound) {
        throw std::length_error("word exceeds the oracle bound");
    }
    Eertree tree(w.size());
    PplTable dp(w.size() + 1, kInf);
    dp[0] = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        tree.add(w[i - 1]);
        for (int v = tree.longest_suffix(); tree.length(v) > 0; v = tree.suffix_link(v)) {
            dp[i] = std::min(dp[i], dp[i - static_cast<std::size_t>(tree.length(v))] + 1);
        }
    }
    return dp;
}

std::vector<std::string_view> PalindromicDecomposition::pieces(std::string_view w) const {
    std::vector<std::string_view> out;
    out.reserve(piece_count());
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        out.push_back(w.substr(bounds[i - 1], bounds[i] - bounds[i - 1]));
    }
    return out;
}

PalindromicDecomposition optimal_decomposition(std::string_view w) {
    EngineRun run = run_engine(w, true);
    PalindromicDecomposition decomposition;
    decomposition.bounds.assign(1, w.size());
    std::size_t j = w.size();
    while (j > 0) {
        // Shortest palindromic suffix that continues an optimal decomposition;
        // suffix-link lengths strictly decrease, so the last hit wins.
        std::size_t best_len = 0;
        for (int v = run.suffix_node[j]; run.tree.length(v) > 0; v = run.tree.suffix_link(v)) {
            const auto len = static_cast<std::size_t>(run.tree.length(v));
            if (run.dp[j - len] + 1 == run.dp[j]) {
                best_len = len;
            }
        }
        if (best_len == 0) {
            throw std::logic_error("decomposition reconstruction failed");
        }
        j -= best_len;
        decomposition.bounds.push_back(j);
    }
    std::reverse(decomposition.bounds.begin(), decomposition.bounds.end());
    return decomposition;
}

std::vector<Occurrence> palindromic_occurrences(std::string_view w, std::size_t bound) {
    if (w.size() > bound) {
        throw std::length_error("word exceeds the occurrence-enumeration bound");
    }
    std::vector<Occurrence> occurrences;
    const auto n = static_cast<std::int64_t>(w.size());
    for (std::int64_t center = 0; center < n; ++center) {
        // Odd lengths around w[center], then even lengths centered before it.
        for (std::int64_t r = 0; center - r >= 0 && center + r < n &&
                                 w[center - r] == w[center + r];
             ++r) {
            occurrences.push_back({static_cast<std::uint32_t>(center - r),
                                   static_cast<std::uint32_t>(center + r + 1)});
        }
        for (std::int64_t r = 1; center - r >= 0 && center + r - 1 < n &&
                                 w[center - r] == w[center + r - 1];
             ++r) {
            occurrences.push_back({static_cast<std::uint32_t>(center - r),
                                   static_cast<std::uint32_t>(center + r)});
        }
    }
    std::sort(occurrences.begin(), occurrences.end());
    return occurrences;
}

std::vector<Occurrence> optimal_piece_graph(std::string_view w, std::size_t bound) {
    std::vector<Occurrence> occurrences = palindromic_occurrences(w, bound);
    const PplTable forward = ppl_all(w);
    const std::string reversed(w.rbegin(), w.rend());
    const PplTable backward = ppl_all(reversed);
    const std::size_t n = w.size();
    const std::uint32_t target = forward[n];

    std::vector<Occurrence> members;
    for (const Occurrence& occ : occurrences) {
        if (forward[occ.start] + 1 + backward[n - occ.end] == target) {
            members.push_back(occ);
        }
    }
    return members;
}

void write_csv(std::ostream& os, const PplTable& table) {
    os << "n,ppl\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        os << i << ',' << table[i] << '\n';
    }
}

void write_jsonl(std::ostream& os, const PplTable& table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
        os << "{\"n\":" << i << ",\"ppl\":" << table[i] << "}\n";
    }
}

}  // namespace palfact
