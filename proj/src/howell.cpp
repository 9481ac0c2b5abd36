#include "z2z4/howell.hpp"

#include <algorithm>
#include <cassert>

namespace z2z4::detail {

namespace {

bool row_is_zero(const Z4Row& r) {
    return std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
}

void row_sub(Z4Row& a, std::uint8_t c, const Z4Row& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<std::uint8_t>((a[i] + 4 * 4 - c * b[i]) & 3u);
}

Z4Row row_scaled(const Z4Row& r, std::uint8_t c) {
    Z4Row out = r;
    for (auto& v : out) v = static_cast<std::uint8_t>((v * c) & 3u);
    return out;
}

void prune_zero_rows(std::vector<Z4Row>& rows) {
    std::erase_if(rows, row_is_zero);
}

}  // namespace

std::size_t HowellForm::unit_pivot_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (pivot_value(i) == 1) ++n;
    return n;
}

HowellForm howell_form(std::vector<Z4Row> work, std::size_t ncols) {
    for (auto& r : work) {
        assert(r.size() == ncols);
        for (auto& v : r) v = static_cast<std::uint8_t>(v & 3u);
    }
    prune_zero_rows(work);

    HowellForm out;
    out.ncols = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
        auto unit_it = std::find_if(work.begin(), work.end(),
                                    [j](const Z4Row& r) { return r[j] % 2 == 1; });
        if (unit_it != work.end()) {
            Z4Row r = std::move(*unit_it);
            work.erase(unit_it);
            if (r[j] == 3) r = row_scaled(r, 3);
            for (auto& w : work)
                if (w[j]) row_sub(w, w[j], r);
            for (auto& done : out.rows)
                if (done[j]) row_sub(done, done[j], r);
            // 2*r is already reachable as a coefficient-2 multiple of r.
            out.rows.push_back(std::move(r));
            out.pivot_cols.push_back(j);
        } else {
            auto two_it = std::find_if(work.begin(), work.end(),
                                       [j](const Z4Row& r) { return r[j] != 0; });
            if (two_it == work.end()) continue;
            Z4Row r = std::move(*two_it);
            work.erase(two_it);
            assert(r[j] == 2);
            for (auto& w : work)
                if (w[j]) row_sub(w, 1, r);  // entries at j are 0 or 2 here
            // Entries above a 2-pivot are reduced into {0, 1}.
            for (auto& done : out.rows)
                if (done[j] >= 2) row_sub(done, 1, r);
            Z4Row dbl = row_scaled(r, 2);
            if (!row_is_zero(dbl)) work.push_back(std::move(dbl));
            out.rows.push_back(std::move(r));
            out.pivot_cols.push_back(j);
        }
        prune_zero_rows(work);
    }
    assert(work.empty());
    return out;
}

Z4Row reduce(const HowellForm& h, Z4Row v, std::size_t col_limit) {
    assert(v.size() == h.ncols);
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        std::size_t j = h.pivot_cols[i];
        if (j >= col_limit) break;
        if (h.pivot_value(i) == 1) {
            if (v[j]) row_sub(v, v[j], h.rows[i]);
        } else {
            if (v[j] >= 2) row_sub(v, 1, h.rows[i]);
        }
    }
    return v;
}

bool reduces_to_zero(const HowellForm& h, const Z4Row& v) {
    return row_is_zero(reduce(h, v, h.ncols));
}

std::vector<std::vector<std::uint8_t>> binary_rref(std::vector<std::vector<std::uint8_t>> rows,
                                                   std::size_t ncols) {
    for (auto& r : rows) {
        assert(r.size() == ncols);
        for (auto& v : r) v = static_cast<std::uint8_t>(v & 1u);
    }
    std::size_t rank = 0;
    for (std::size_t j = 0; j < ncols && rank < rows.size(); ++j) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][j] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][j] == 0) continue;
            for (std::size_t k = 0; k < ncols; ++k) rows[i][k] ^= rows[rank][k];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

Z4Row embed_xy(const MixedWord& w) {
    Z4Row v;
    v.reserve(w.x.size() + w.y.size());
    for (auto u : w.x) v.push_back(static_cast<std::uint8_t>(2 * (u & 1u)));
    for (auto u : w.y) v.push_back(static_cast<std::uint8_t>(u & 3u));
    return v;
}

Z4Row embed_yx(const MixedWord& w) {
    Z4Row v;
    v.reserve(w.x.size() + w.y.size());
    for (auto u : w.y) v.push_back(static_cast<std::uint8_t>(u & 3u));
    for (auto u : w.x) v.push_back(static_cast<std::uint8_t>(2 * (u & 1u)));
    return v;
}

MixedWord unembed_xy(const Z4Row& v, std::size_t alpha, std::size_t beta) {
    assert(v.size() == alpha + beta);
    MixedWord w = zero_word(alpha, beta);
    for (std::size_t i = 0; i < alpha; ++i) {
        assert(v[i] % 2 == 0);
        w.x[i] = static_cast<std::uint8_t>(v[i] / 2);
    }
    for (std::size_t i = 0; i < beta; ++i) w.y[i] = v[alpha + i];
    return w;
}

MixedWord unembed_yx(const Z4Row& v, std::size_t alpha, std::size_t beta) {
    assert(v.size() == alpha + beta);
    MixedWord w = zero_word(alpha, beta);
    for (std::size_t i = 0; i < beta; ++i) w.y[i] = v[i];
    for (std::size_t i = 0; i < alpha; ++i) {
        assert(v[beta + i] % 2 == 0);
        w.x[i] = static_cast<std::uint8_t>(v[beta + i] / 2);
    }
    return w;
}

HowellForm howell_xy(const MixedMatrix& m) {
    std::vector<Z4Row> rows;
    rows.reserve(m.rows.size());
    for (const auto& r : m.rows) rows.push_back(embed_xy(r));
    return howell_form(std::move(rows), m.alpha + m.beta);
}

HowellForm howell_yx(const MixedMatrix& m) {
    std::vector<Z4Row> rows;
    rows.reserve(m.rows.size());
    for (const auto& r : m.rows) rows.push_back(embed_yx(r));
    return howell_form(std::move(rows), m.alpha + m.beta);
}

}  // namespace z2z4::detail
