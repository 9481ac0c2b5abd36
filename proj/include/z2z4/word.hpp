#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace z2z4 {

/// An element (u | u') of Z2^alpha x Z4^beta.
struct MixedWord {
    std::vector<std::uint8_t> x;  // residues mod 2
    std::vector<std::uint8_t> y;  // residues mod 4

    bool is_zero() const;
    friend bool operator==(const MixedWord&, const MixedWord&) = default;
    friend auto operator<=>(const MixedWord&, const MixedWord&) = default;
};

MixedWord zero_word(std::size_t alpha, std::size_t beta);

/// Simultaneous cyclic rotation of both parts by one position; agrees with
/// multiplication by x under the coordinate-to-polynomial map.
MixedWord shift(const MixedWord& w);

MixedWord add(const MixedWord& a, const MixedWord& b);
MixedWord sub(const MixedWord& a, const MixedWord& b);
/// c acts mod 4 on the Y-part and through its mod-2 reduction on the X-part.
MixedWord scale(std::uint8_t c, const MixedWord& w);

/// Generator matrix over the mixed alphabet; all rows share (alpha, beta).
struct MixedMatrix {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::vector<MixedWord> rows;
};

}  // namespace z2z4
