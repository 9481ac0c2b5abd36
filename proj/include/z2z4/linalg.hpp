#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "z2z4/word.hpp"

namespace z2z4 {

/// The five type parameters (alpha, beta; gamma, delta; kappa).
struct CodeType {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t kappa = 0;

    friend bool operator==(const CodeType&, const CodeType&) = default;
    std::string to_string() const;
};

/// Standard-form generator matrix
///
///   [ I_k  T_b | 2T_2  0      0   ]
///   [ 0    0   | 2T_1  2I_g-k 0   ]
///   [ 0    S_b | S_q   R      I_d ]
///
/// together with the column permutations that produce it. perm_x[i] (resp.
/// perm_y[i]) is the original column shown at position i; the permutations
/// are recorded, never applied implicitly elsewhere.
struct StandardForm {
    MixedMatrix matrix;
    std::vector<std::size_t> perm_x;
    std::vector<std::size_t> perm_y;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t kappa = 0;
};

StandardForm standard_form(const MixedMatrix& m);

CodeType code_type(const MixedMatrix& m);

/// true iff w is a Z4-linear combination of the rows of m.
bool member(const MixedMatrix& m, const MixedWord& w);

/// Some codeword c in the span of m with c.y == t; solves against the
/// original column order, free variables set to zero. Throws NoSolution
/// when t is not in the punctured code C_Y.
MixedWord find_preimage_with_y(const MixedMatrix& m, const std::vector<std::uint8_t>& t);

/// Generating set over Z2 of {w in Z2^alpha : (w | 0) in span(m)}.
std::vector<std::vector<std::uint8_t>> kernel_x(const MixedMatrix& m);

}  // namespace z2z4
