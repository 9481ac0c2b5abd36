#pragma once

#include <cstddef>
#include <cstdint>
#include <set>

#include "z2z4/cyclicgen.hpp"
#include "z2z4/word.hpp"

namespace z2z4 {

/// Ground-truth span by sweeping all coefficient vectors in Z4^rows;
/// guarded at 12 rows.
std::set<MixedWord> brute_force_span(const MixedMatrix& m);

/// Deterministic sampler of tuples satisfying (C1)-(C4). The draw works by
/// gcd with x^beta - 1 (squarefree for odd beta, so the f/h split is
/// automatically coprime) and constructs l as a multiple of
/// b / gcd(b, (x^beta - 1)/fbar), which enforces (C4) directly.
CyclicGenerators sample_valid_generators(std::size_t alpha, std::size_t beta, std::uint64_t seed);

}  // namespace z2z4
