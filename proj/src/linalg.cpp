#include "z2z4/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "z2z4/errors.hpp"
#include "z2z4/howell.hpp"

namespace z2z4 {

namespace {

using detail::HowellForm;
using detail::Z4Row;

void check_dims(const MixedMatrix& m, const MixedWord& w) {
    if (w.x.size() != m.alpha || w.y.size() != m.beta)
        throw DimensionMismatch("word has shape (" + std::to_string(w.x.size()) + "|" +
                                std::to_string(w.y.size()) + "), matrix expects (" +
                                std::to_string(m.alpha) + "|" + std::to_string(m.beta) + ")");
}

// a -= c * b on mixed words, in place.
void row_sub(MixedWord& a, std::uint8_t c, const MixedWord& b) {
    for (std::size_t i = 0; i < a.x.size(); ++i)
        a.x[i] = static_cast<std::uint8_t>(a.x[i] ^ (c & b.x[i] & 1u));
    for (std::size_t i = 0; i < a.y.size(); ++i)
        a.y[i] = static_cast<std::uint8_t>((a.y[i] + 4 * 4 - c * b.y[i]) & 3u);
}

struct Pivot {
    MixedWord row;
    std::size_t col;
};

}  // namespace

std::string CodeType::to_string() const {
    return "(" + std::to_string(alpha) + ", " + std::to_string(beta) + "; " +
           std::to_string(gamma) + ", " + std::to_string(delta) + "; " + std::to_string(kappa) +
           ")";
}

StandardForm standard_form(const MixedMatrix& m) {
    const std::size_t alpha = m.alpha, beta = m.beta;
    std::vector<MixedWord> work;
    for (const auto& r : m.rows) {
        assert(r.x.size() == alpha && r.y.size() == beta);
        if (!r.is_zero()) work.push_back(r);
    }
    auto prune = [&] { std::erase_if(work, [](const MixedWord& w) { return w.is_zero(); }); };

    // Unit pivots in the Y columns give the delta rows. Their doubles are
    // coefficient-2 multiples, so they never become rows of their own; full
    // clearing of the pivot columns keeps the leftover order-two rows
    // independent of 2*(delta rows).
    std::vector<Pivot> delta_rows;
    for (std::size_t j = 0; j < beta; ++j) {
        auto it = std::find_if(work.begin(), work.end(),
                               [j](const MixedWord& w) { return w.y[j] % 2 == 1; });
        if (it == work.end()) continue;
        MixedWord r = std::move(*it);
        work.erase(it);
        if (r.y[j] == 3) r = scale(3, r);
        for (auto& w : work)
            if (w.y[j]) row_sub(w, w.y[j], r);
        for (auto& d : delta_rows)
            if (d.row.y[j]) row_sub(d.row, d.row.y[j], r);
        delta_rows.push_back({std::move(r), j});
        prune();
    }
    // Remaining rows carry no unit Y-entry, so they all have order two.

    // Unit pivots in the X columns among the order-two rows: kappa rows.
    std::vector<Pivot> kappa_rows;
    for (std::size_t i = 0; i < alpha; ++i) {
        auto it = std::find_if(work.begin(), work.end(),
                               [i](const MixedWord& w) { return w.x[i] == 1; });
        if (it == work.end()) continue;
        MixedWord r = std::move(*it);
        work.erase(it);
        for (auto& w : work)
            if (w.x[i]) row_sub(w, 1, r);
        for (auto& k : kappa_rows)
            if (k.row.x[i]) row_sub(k.row, 1, r);
        for (auto& d : delta_rows)
            if (d.row.x[i]) row_sub(d.row, 1, r);
        kappa_rows.push_back({std::move(r), i});
        prune();
    }
    // Leftover order-two rows now have zero X-part.

    // 2-pivots in the Y columns: the gamma - kappa rows.
    std::vector<Pivot> two_rows;
    for (std::size_t j = 0; j < beta; ++j) {
        auto it = std::find_if(work.begin(), work.end(),
                               [j](const MixedWord& w) { return w.y[j] == 2; });
        if (it == work.end()) continue;
        MixedWord r = std::move(*it);
        work.erase(it);
        for (auto& w : work)
            if (w.y[j]) row_sub(w, 1, r);
        for (auto& k : kappa_rows)
            if (k.row.y[j]) row_sub(k.row, 1, r);
        for (auto& t : two_rows)
            if (t.row.y[j]) row_sub(t.row, 1, r);
        for (auto& d : delta_rows)
            if (d.row.y[j] >= 2) row_sub(d.row, 1, r);  // R entries reduce into {0,1}
        two_rows.push_back({std::move(r), j});
        prune();
    }
    assert(work.empty());

    StandardForm out;
    out.kappa = kappa_rows.size();
    out.delta = delta_rows.size();
    out.gamma = kappa_rows.size() + two_rows.size();

    // Column order: X pivots first; Y as [free | 2-pivots | unit pivots].
    std::vector<bool> x_used(alpha, false), y_used(beta, false);
    for (const auto& k : kappa_rows) {
        out.perm_x.push_back(k.col);
        x_used[k.col] = true;
    }
    for (std::size_t i = 0; i < alpha; ++i)
        if (!x_used[i]) out.perm_x.push_back(i);
    for (const auto& t : two_rows) y_used[t.col] = true;
    for (const auto& d : delta_rows) y_used[d.col] = true;
    for (std::size_t j = 0; j < beta; ++j)
        if (!y_used[j]) out.perm_y.push_back(j);
    for (const auto& t : two_rows) out.perm_y.push_back(t.col);
    for (const auto& d : delta_rows) out.perm_y.push_back(d.col);

    auto permuted = [&](const MixedWord& w) {
        MixedWord p = zero_word(alpha, beta);
        for (std::size_t i = 0; i < alpha; ++i) p.x[i] = w.x[out.perm_x[i]];
        for (std::size_t j = 0; j < beta; ++j) p.y[j] = w.y[out.perm_y[j]];
        return p;
    };
    out.matrix.alpha = alpha;
    out.matrix.beta = beta;
    for (const auto& k : kappa_rows) out.matrix.rows.push_back(permuted(k.row));
    for (const auto& t : two_rows) out.matrix.rows.push_back(permuted(t.row));
    for (const auto& d : delta_rows) out.matrix.rows.push_back(permuted(d.row));
    return out;
}

CodeType code_type(const MixedMatrix& m) {
    StandardForm sf = standard_form(m);
    return CodeType{m.alpha, m.beta, sf.gamma, sf.delta, sf.kappa};
}

bool member(const MixedMatrix& m, const MixedWord& w) {
    check_dims(m, w);
    HowellForm h = detail::howell_xy(m);
    return detail::reduces_to_zero(h, detail::embed_xy(w));
}

MixedWord find_preimage_with_y(const MixedMatrix& m, const std::vector<std::uint8_t>& t) {
    if (t.size() != m.beta)
        throw DimensionMismatch("target has length " + std::to_string(t.size()) +
                                ", expected beta = " + std::to_string(m.beta));
    HowellForm h = detail::howell_yx(m);
    Z4Row v(m.alpha + m.beta, 0);
    for (std::size_t j = 0; j < m.beta; ++j) v[j] = static_cast<std::uint8_t>(t[j] & 3u);
    // Eliminate on the Y columns only; the X columns ride along and collect
    // the negated X-part of the combination used.
    Z4Row res = detail::reduce(h, v, m.beta);
    for (std::size_t j = 0; j < m.beta; ++j)
        if (res[j]) throw NoSolution("target Y-word is not in the punctured code C_Y");
    MixedWord c = zero_word(m.alpha, m.beta);
    for (std::size_t j = 0; j < m.beta; ++j) c.y[j] = static_cast<std::uint8_t>(t[j] & 3u);
    for (std::size_t i = 0; i < m.alpha; ++i) {
        std::uint8_t e = static_cast<std::uint8_t>((4 - res[m.beta + i]) & 3u);
        assert(e % 2 == 0);
        c.x[i] = static_cast<std::uint8_t>(e / 2);
    }
    return c;
}

std::vector<std::vector<std::uint8_t>> kernel_x(const MixedMatrix& m) {
    HowellForm h = detail::howell_yx(m);
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        if (h.pivot_cols[i] < m.beta) continue;
        std::vector<std::uint8_t> w(m.alpha, 0);
        for (std::size_t k = 0; k < m.alpha; ++k) {
            assert(h.rows[i][m.beta + k] % 2 == 0);
            w[k] = static_cast<std::uint8_t>(h.rows[i][m.beta + k] / 2);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace z2z4
