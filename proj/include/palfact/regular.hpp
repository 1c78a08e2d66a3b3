#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "palfact/report.hpp"

namespace palfact::tm {

using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;
using Vec4 = std::array<std::int64_t, 4>;

// Linear representation of a 4-regular sequence: a component vector V(n)
// with digit matrices such that V(4n + b) = matrices[b] * V(n). Components
// here are (PPL(n), d(n), e(n), 1) where d is the first difference and
// e(n) = 1 exactly when d(n) = -1.
struct LinearRepresentation {
    std::array<std::string, 4> components{"ppl", "d", "e", "one"};
    std::array<Mat4, 4> matrices{};
    Vec4 initial{};   // V(0)
    int selector = 0; // row carrying the sequence value
};

// Builds the representation: PPL rows come from the residue identities
//   PPL(4n) = PPL(n)                PPL(4n+1) = PPL(n) + 1
//   PPL(4n+2) = PPL(n) + 2 - e(n)   PPL(4n+3) = PPL(n) + d(n) + 1
// and the d/e rows are interpolated from the images of the difference
// morphism, then checked against the difference sequence for n < 4096.
LinearRepresentation build_representation();

// V(n): apply the digit matrices along base-4 digits, least significant
// digit as the leftmost factor.
Vec4 eval_vector(const LinearRepresentation& rep, std::uint64_t n);
std::int64_t eval(const LinearRepresentation& rep, std::uint64_t n);

// Checks eval against the closed form for all n <= n_max and for 1000
// deterministic pseudo-random n up to 10^18, and the d/e components against
// the difference sequence and its coding.
VerificationReport verify_representation(const LinearRepresentation& rep,
                                         std::uint64_t n_max);

nlohmann::json representation_json(const LinearRepresentation& rep);
void print_representation(std::ostream& os, const LinearRepresentation& rep);

}  // namespace palfact::tm
