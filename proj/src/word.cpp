#include "z2z4/word.hpp"

#include <algorithm>
#include <cassert>

namespace z2z4 {

bool MixedWord::is_zero() const {
    auto nz = [](std::uint8_t v) { return v != 0; };
    return std::none_of(x.begin(), x.end(), nz) && std::none_of(y.begin(), y.end(), nz);
}

MixedWord zero_word(std::size_t alpha, std::size_t beta) {
    return MixedWord{std::vector<std::uint8_t>(alpha, 0), std::vector<std::uint8_t>(beta, 0)};
}

MixedWord shift(const MixedWord& w) {
    MixedWord out = w;
    if (!out.x.empty()) std::rotate(out.x.rbegin(), out.x.rbegin() + 1, out.x.rend());
    if (!out.y.empty()) std::rotate(out.y.rbegin(), out.y.rbegin() + 1, out.y.rend());
    return out;
}

MixedWord add(const MixedWord& a, const MixedWord& b) {
    assert(a.x.size() == b.x.size() && a.y.size() == b.y.size());
    MixedWord out = a;
    for (std::size_t i = 0; i < b.x.size(); ++i)
        out.x[i] = static_cast<std::uint8_t>(out.x[i] ^ b.x[i]);
    for (std::size_t i = 0; i < b.y.size(); ++i)
        out.y[i] = static_cast<std::uint8_t>((out.y[i] + b.y[i]) & 3u);
    return out;
}

MixedWord sub(const MixedWord& a, const MixedWord& b) {
    assert(a.x.size() == b.x.size() && a.y.size() == b.y.size());
    MixedWord out = a;
    for (std::size_t i = 0; i < b.x.size(); ++i)
        out.x[i] = static_cast<std::uint8_t>(out.x[i] ^ b.x[i]);
    for (std::size_t i = 0; i < b.y.size(); ++i)
        out.y[i] = static_cast<std::uint8_t>((out.y[i] + 4 - b.y[i]) & 3u);
    return out;
}

MixedWord scale(std::uint8_t c, const MixedWord& w) {
    MixedWord out = w;
    for (auto& v : out.x) v = static_cast<std::uint8_t>(v & c & 1u);
    for (auto& v : out.y) v = static_cast<std::uint8_t>((v * c) & 3u);
    return out;
}

}  // namespace z2z4
