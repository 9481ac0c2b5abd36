#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "z2z4/linalg.hpp"
#include "z2z4/word.hpp"

namespace z2z4 {

/// A Z2Z4-additive code, given as the Z4-span of its generator rows.
struct AdditiveCode {
    MixedMatrix gens;

    std::size_t alpha() const { return gens.alpha; }
    std::size_t beta() const { return gens.beta; }
};

/// Closure of the code under the simultaneous cyclic shift; checking the
/// generators suffices since the shift is additive.
bool is_cyclic(const AdditiveCode& c);

/// X-parts (resp. Y-parts) of the generators; they span C_X (resp. C_Y).
std::vector<std::vector<std::uint8_t>> puncture_x(const AdditiveCode& c);
std::vector<std::vector<std::uint8_t>> puncture_y(const AdditiveCode& c);

/// Generating set of Tor(D) = {v in {0,1}^beta : 2v in span(D)}.
std::vector<std::vector<std::uint8_t>> torsion(const std::vector<std::vector<std::uint8_t>>& d,
                                               std::size_t beta);

/// Generating set of Res(D), the mod-2 reductions of span(D).
std::vector<std::vector<std::uint8_t>> residue(const std::vector<std::vector<std::uint8_t>>& d,
                                               std::size_t beta);

/// Mutual generator membership plus equal cardinality 2^(gamma+2delta).
bool equals(const AdditiveCode& a, const AdditiveCode& b);

/// The exact codeword set, by sweeping coefficient vectors over the
/// standard-form rows; guarded at 2^20 words.
std::set<MixedWord> enumerate_code(const AdditiveCode& c);

}  // namespace z2z4
