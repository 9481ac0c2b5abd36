#include "z2z4/code.hpp"

#include <algorithm>
#include <cassert>

#include "z2z4/errors.hpp"
#include "z2z4/howell.hpp"

namespace z2z4 {

namespace {

using detail::HowellForm;

}  // namespace

bool is_cyclic(const AdditiveCode& c) {
    HowellForm h = detail::howell_xy(c.gens);
    for (const auto& g : c.gens.rows)
        if (!detail::reduces_to_zero(h, detail::embed_xy(shift(g)))) return false;
    return true;
}

std::vector<std::vector<std::uint8_t>> puncture_x(const AdditiveCode& c) {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(c.gens.rows.size());
    for (const auto& r : c.gens.rows) out.push_back(r.x);
    return out;
}

std::vector<std::vector<std::uint8_t>> puncture_y(const AdditiveCode& c) {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(c.gens.rows.size());
    for (const auto& r : c.gens.rows) out.push_back(r.y);
    return out;
}

std::vector<std::vector<std::uint8_t>> torsion(const std::vector<std::vector<std::uint8_t>>& d,
                                               std::size_t beta) {
    std::vector<detail::Z4Row> rows;
    for (const auto& r : d) {
        assert(r.size() == beta);
        rows.push_back(r);
    }
    HowellForm h = detail::howell_form(std::move(rows), beta);
    // Unit-pivot rows contribute their mod-2 reading; rows lying entirely in
    // 2Z4 contribute their halving.
    std::vector<std::vector<std::uint8_t>> gens;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        const auto& row = h.rows[i];
        if (h.pivot_value(i) == 1) {
            std::vector<std::uint8_t> v(beta, 0);
            for (std::size_t j = 0; j < beta; ++j) v[j] = static_cast<std::uint8_t>(row[j] & 1u);
            gens.push_back(std::move(v));
        } else if (std::all_of(row.begin(), row.end(), [](std::uint8_t e) { return e % 2 == 0; })) {
            std::vector<std::uint8_t> v(beta, 0);
            for (std::size_t j = 0; j < beta; ++j) v[j] = static_cast<std::uint8_t>(row[j] / 2);
            gens.push_back(std::move(v));
        }
    }
    return detail::binary_rref(std::move(gens), beta);
}

std::vector<std::vector<std::uint8_t>> residue(const std::vector<std::vector<std::uint8_t>>& d,
                                               std::size_t beta) {
    std::vector<std::vector<std::uint8_t>> gens;
    for (const auto& r : d) {
        assert(r.size() == beta);
        std::vector<std::uint8_t> v(beta, 0);
        for (std::size_t j = 0; j < beta; ++j) v[j] = static_cast<std::uint8_t>(r[j] & 1u);
        gens.push_back(std::move(v));
    }
    return detail::binary_rref(std::move(gens), beta);
}

bool equals(const AdditiveCode& a, const AdditiveCode& b) {
    if (a.alpha() != b.alpha() || b.beta() != a.beta())
        throw DimensionMismatch("codes have different (alpha, beta)");
    HowellForm ha = detail::howell_xy(a.gens);
    HowellForm hb = detail::howell_xy(b.gens);
    if (ha.log2_size() != hb.log2_size()) return false;
    for (const auto& g : a.gens.rows)
        if (!detail::reduces_to_zero(hb, detail::embed_xy(g))) return false;
    for (const auto& g : b.gens.rows)
        if (!detail::reduces_to_zero(ha, detail::embed_xy(g))) return false;
    return true;
}

std::set<MixedWord> enumerate_code(const AdditiveCode& c) {
    StandardForm sf = standard_form(c.gens);
    if (sf.gamma + 2 * sf.delta > 20)
        throw TooLarge("code has 2^" + std::to_string(sf.gamma + 2 * sf.delta) +
                       " words, enumeration is capped at 2^20");

    // Undo the column permutations so the sweep happens in the original
    // coordinate order.
    std::vector<MixedWord> rows;
    for (const auto& r : sf.matrix.rows) {
        MixedWord orig = zero_word(c.alpha(), c.beta());
        for (std::size_t i = 0; i < c.alpha(); ++i) orig.x[sf.perm_x[i]] = r.x[i];
        for (std::size_t j = 0; j < c.beta(); ++j) orig.y[sf.perm_y[j]] = r.y[j];
        rows.push_back(std::move(orig));
    }

    std::set<MixedWord> words;
    std::vector<std::uint8_t> coeff(rows.size(), 0);
    while (true) {
        MixedWord w = zero_word(c.alpha(), c.beta());
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (coeff[i]) w = add(w, scale(coeff[i], rows[i]));
        words.insert(std::move(w));
        // Odometer: Z2 range for the first gamma rows, Z4 for the delta rows.
        std::size_t i = 0;
        for (; i < rows.size(); ++i) {
            std::uint8_t limit = i < sf.gamma ? 2 : 4;
            coeff[i] = static_cast<std::uint8_t>((coeff[i] + 1) % limit);
            if (coeff[i]) break;
        }
        if (i == rows.size()) break;
    }
    return words;
}

}  // namespace z2z4
