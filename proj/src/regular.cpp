#include "palfact/regular.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "palfact/thue_morse.hpp"

namespace palfact::tm {

namespace {

// Row of coefficients over (ppl, d, e, one) reproducing out(d) on the three
// difference values, using e = 1 iff d = -1. With gamma = out(0) and
// alpha = out(1) - out(0), the Down case fixes beta.
std::array<std::int64_t, 4> interpolate_row(int out_up, int out_flat, int out_down) {
    const std::int64_t gamma = out_flat;
    const std::int64_t alpha = out_up - out_flat;
    const std::int64_t beta = out_down + alpha - gamma;
    return {0, alpha, beta, gamma};
}

int coding_e(DiffSymbol s) {
    return s == DiffSymbol::Down ? 1 : 0;
}

}  // namespace

LinearRepresentation build_representation() {
    LinearRepresentation rep;
    rep.initial = {0, 1, 0, 1};  // PPL(0) = 0, d(0) = 1, e(0) = 0
    rep.selector = 0;

    // PPL rows of the four digit matrices.
    rep.matrices[0][0] = {1, 0, 0, 0};
    rep.matrices[1][0] = {1, 0, 0, 1};
    rep.matrices[2][0] = {1, 0, -1, 2};
    rep.matrices[3][0] = {1, 1, 0, 1};

    for (int b = 0; b < 4; ++b) {
        const int d_up = to_int(delta_image(DiffSymbol::Up)[b]);
        const int d_flat = to_int(delta_image(DiffSymbol::Flat)[b]);
        const int d_down = to_int(delta_image(DiffSymbol::Down)[b]);
        rep.matrices[b][1] = interpolate_row(d_up, d_flat, d_down);
        rep.matrices[b][2] = interpolate_row(coding_e(delta_image(DiffSymbol::Up)[b]),
                                             coding_e(delta_image(DiffSymbol::Flat)[b]),
                                             coding_e(delta_image(DiffSymbol::Down)[b]));
        rep.matrices[b][3] = {0, 0, 0, 1};
    }

    // Interpolation only used three data points per row; confirm the d and e
    // components against the difference sequence before handing the result out.
    const DiffSequence diffs = diff_prefix(4097);
    for (std::uint64_t n = 0; n < 4096; ++n) {
        const Vec4 v = eval_vector(rep, n);
        if (v[1] != to_int(diffs[n]) || v[2] != coding_e(diffs[n]) || v[3] != 1) {
            throw std::logic_error("digit-matrix interpolation failed self-check");
        }
    }
    return rep;
}

Vec4 eval_vector(const LinearRepresentation& rep, std::uint64_t n) {
    unsigned digits[32];
    int count = 0;
    for (; n != 0; n >>= 2) {
        digits[count++] = static_cast<unsigned>(n & 3);
    }
    // V(4m + b) = mu(b) V(m): peel digits from the most significant side.
    using Wide = __int128;
    std::array<Wide, 4> v{};
    for (std::size_t i = 0; i < 4; ++i) {
        v[i] = rep.initial[i];
    }
    for (int i = count - 1; i >= 0; --i) {
        const Mat4& m = rep.matrices[digits[i]];
        std::array<Wide, 4> next{};
        for (int row = 0; row < 4; ++row) {
            Wide sum = 0;
            for (int col = 0; col < 4; ++col) {
                sum += static_cast<Wide>(m[row][col]) * v[col];
            }
            next[row] = sum;
        }
        v = next;
    }
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        // Saturate: only mutated matrices can overflow 64 bits, and a
        // saturated component still reads as a mismatch.
        constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
        constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
        out[i] = static_cast<std::int64_t>(std::min(hi, std::max(lo, v[i])));
    }
    return out;
}

std::int64_t eval(const LinearRepresentation& rep, std::uint64_t n) {
    return eval_vector(rep, n)[rep.selector];
}

VerificationReport verify_representation(const LinearRepresentation& rep,
                                         std::uint64_t n_max) {
    VerificationReport report;
    const auto start = std::chrono::steady_clock::now();

    CheckResult values;
    values.check = "representation-values";
    values.range_end = n_max;
    CheckResult components;
    components.check = "representation-components";
    components.range_end = n_max;

    const DiffSequence diffs = diff_prefix(std::min<std::uint64_t>(n_max, 1u << 16));
    auto check_one = [&](std::uint64_t n) {
        const Vec4 v = eval_vector(rep, n);
        const PplPair pair = ppl_pair(n);
        if (v[rep.selector] < 0 ||
            static_cast<std::uint64_t>(v[rep.selector]) != pair.value) {
            values.violations.push_back(
                {{"n", n}, {"matrix", v[rep.selector]}, {"closed", pair.value}});
        }
        const auto d = static_cast<std::int64_t>(pair.next) - static_cast<std::int64_t>(pair.value);
        if (v[1] != d || v[2] != (d == -1 ? 1 : 0) || v[3] != 1 || v[1] < -1 || v[1] > 1) {
            components.violations.push_back({{"n", n}, {"d", v[1]}, {"e", v[2]}});
        }
        if (n < diffs.size() && v[1] != to_int(diffs[n])) {
            components.violations.push_back(
                {{"n", n}, {"d", v[1]}, {"difference", to_int(diffs[n])}});
        }
    };

    for (std::uint64_t n = 0; n <= n_max; ++n) {
        check_one(n);
    }
    values.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    components.elapsed = values.elapsed;

    CheckResult random;
    random.check = "representation-random";
    random.range_end = 1'000'000'000'000'000'000ULL;
    const auto rand_start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x70a1f4c7u);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = rng() % (random.range_end + 1);
        const Vec4 v = eval_vector(rep, n);
        const PplPair pair = ppl_pair(n);
        const auto d = static_cast<std::int64_t>(pair.next) - static_cast<std::int64_t>(pair.value);
        if (v[rep.selector] < 0 ||
            static_cast<std::uint64_t>(v[rep.selector]) != pair.value || v[1] != d) {
            random.violations.push_back(
                {{"n", n}, {"matrix", v[rep.selector]}, {"closed", pair.value}});
        }
    }
    random.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - rand_start).count();

    report.checks.push_back(std::move(values));
    report.checks.push_back(std::move(components));
    report.checks.push_back(std::move(random));
    return report;
}

nlohmann::json representation_json(const LinearRepresentation& rep) {
    nlohmann::json matrices = nlohmann::json::array();
    for (const Mat4& m : rep.matrices) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m) {
            rows.push_back(row);
        }
        matrices.push_back(rows);
    }
    return {{"components", rep.components},
            {"selector", rep.selector},
            {"initial", rep.initial},
            {"matrices", matrices}};
}

void print_representation(std::ostream& os, const LinearRepresentation& rep) {
    os << "components:";
    for (const std::string& name : rep.components) {
        os << ' ' << name;
    }
    os << "\nV(0) =";
    for (std::int64_t x : rep.initial) {
        os << ' ' << x;
    }
    os << "\n";
    for (int b = 0; b < 4; ++b) {
        os << "mu(" << b << "):\n";
        for (const auto& row : rep.matrices[b]) {
            os << " ";
            for (std::int64_t x : row) {
                os << ' ' << x;
            }
            os << '\n';
        }
    }
}

}  // namespace palfact::tm
