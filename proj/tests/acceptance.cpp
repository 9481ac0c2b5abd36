// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact; the only tolerances are the wall-clock
// budgets pinned below.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "z2z4/cli.hpp"
#include "z2z4/code.hpp"
#include "z2z4/cyclicgen.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/linalg.hpp"
#include "z2z4/oracle.hpp"
#include "z2z4/poly.hpp"

using namespace z2z4;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kBudgetRoundTripSec = 30.0;
constexpr double kBudgetHenselSec = 10.0;
constexpr double kBudgetOracleSec = 10.0;

int g_failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << name << "): " << (pass ? "pass" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

// All monic divisors of x^n - 1 over Z2, by exhaustive trial division.
std::vector<BinaryPoly> binary_divisors(std::size_t n) {
    BinaryPoly target = BinaryPoly::x_pow_minus_one(n);
    std::vector<BinaryPoly> out;
    for (std::uint32_t bits = 1; bits < (1u << (n + 1)); ++bits) {
        std::vector<std::uint8_t> c;
        for (std::size_t i = 0; i <= n; ++i) c.push_back((bits >> i) & 1u);
        BinaryPoly d(std::move(c));
        if (d.divides(target)) out.push_back(std::move(d));
    }
    return out;
}

MixedMatrix random_matrix(std::mt19937_64& rng, std::size_t alpha, std::size_t beta,
                          std::size_t nrows) {
    MixedMatrix m{alpha, beta, {}};
    for (std::size_t r = 0; r < nrows; ++r) {
        MixedWord w = zero_word(alpha, beta);
        for (auto& v : w.x) v = static_cast<std::uint8_t>(rng() & 1u);
        for (auto& v : w.y) v = static_cast<std::uint8_t>(rng() & 3u);
        m.rows.push_back(std::move(w));
    }
    return m;
}

struct CorpusEntry {
    CyclicGenerators sampled;
    AdditiveCode code;
    CyclicGenerators computed;
};

}  // namespace

int main() {
    const std::vector<std::size_t> alphas = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<std::size_t> betas = {1, 3, 5, 7, 9, 15};

    // --- Criterion 1: round trip on >= 200 sampled tuples, < 30 s ----------
    std::vector<CorpusEntry> corpus;
    bool c1 = true;
    std::string c1_detail;
    auto t0 = Clock::now();
    for (std::size_t a : alphas) {
        for (std::size_t b : betas) {
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                CyclicGenerators g = sample_valid_generators(a, b, seed);
                AdditiveCode c = reconstruct(g);
                CyclicGenerators got = compute_generators(c);
                if (!verify_conditions(got).all_pass() || !equals(reconstruct(got), c)) {
                    c1 = false;
                    c1_detail = "failed at alpha=" + std::to_string(a) +
                                " beta=" + std::to_string(b) + " seed=" + std::to_string(seed);
                }
                corpus.push_back({std::move(g), std::move(c), std::move(got)});
            }
        }
    }
    double c1_time = seconds_since(t0);
    if (corpus.size() < 200) {
        c1 = false;
        c1_detail = "corpus too small: " + std::to_string(corpus.size());
    }
    if (c1 && c1_time >= kBudgetRoundTripSec) {
        c1 = false;
        c1_detail = "over time budget";
    }
    if (c1)
        c1_detail = std::to_string(corpus.size()) + " tuples, " + fmt_secs(c1_time);
    report(1, "round trip", c1, c1_detail);

    // --- Criterion 2: idempotence field-by-field on the same corpus --------
    bool c2 = true;
    std::string c2_detail;
    for (const auto& e : corpus) {
        CyclicGenerators again = compute_generators(reconstruct(e.computed));
        if (!(again.b == e.computed.b && again.l == e.computed.l && again.f == e.computed.f &&
              again.h == e.computed.h)) {
            c2 = false;
            c2_detail = "mismatch at alpha=" + std::to_string(e.computed.alpha) +
                        " beta=" + std::to_string(e.computed.beta);
            break;
        }
    }
    report(2, "idempotence", c2, c2_detail);

    // --- Criterion 3: Hensel lift over all divisors, < 10 s ----------------
    bool c3 = true;
    std::string c3_detail;
    t0 = Clock::now();
    std::size_t lifted = 0;
    for (std::size_t b : betas) {
        QuatPoly xb1 = QuatPoly::x_pow_minus_one(b);
        for (const auto& fbar : binary_divisors(b)) {
            QuatPoly f = hensel_lift(fbar, b);
            if (!(f.reduce_mod2() == fbar) || !QuatPoly::divmod(xb1, f).second.is_zero()) {
                c3 = false;
                c3_detail = "failed for divisor " + fbar.to_coeff_string() +
                            " at beta=" + std::to_string(b);
            }
            ++lifted;
        }
    }
    double c3_time = seconds_since(t0);
    if (c3 && c3_time >= kBudgetHenselSec) {
        c3 = false;
        c3_detail = "over time budget";
    }
    if (c3) c3_detail = std::to_string(lifted) + " divisors, " + fmt_secs(c3_time);
    report(3, "hensel lift", c3, c3_detail);

    // --- Criterion 4: enumerate vs brute force + cardinality, < 10 s -------
    bool c4 = true;
    std::string c4_detail;
    t0 = Clock::now();
    std::mt19937_64 rng(2024);
    const std::size_t kOracleInstances = 120;
    for (std::size_t it = 0; it < kOracleInstances; ++it) {
        std::size_t alpha = rng() % 6;                        // <= 5
        std::size_t beta = 1 + 2 * (rng() % 3);               // {1,3,5}
        MixedMatrix m = random_matrix(rng, alpha, beta, rng() % 9);  // <= 8 rows
        auto span = brute_force_span(m);
        auto words = enumerate_code(AdditiveCode{m});
        CodeType ty = code_type(m);
        if (words != span || span.size() != (std::size_t{1} << (ty.gamma + 2 * ty.delta))) {
            c4 = false;
            c4_detail = "mismatch at instance " + std::to_string(it);
        }
    }
    double c4_time = seconds_since(t0);
    if (c4 && c4_time >= kBudgetOracleSec) {
        c4 = false;
        c4_detail = "over time budget";
    }
    if (c4) c4_detail = std::to_string(kOracleInstances) + " instances, " + fmt_secs(c4_time);
    report(4, "oracle equivalence", c4, c4_detail);

    // --- Criterion 5: Res subset of Tor; cyclic D: gen(Tor) | gen(Res) -----
    bool c5 = true;
    std::string c5_detail;
    for (std::size_t it = 0; it < 120; ++it) {
        std::size_t beta = 1 + rng() % 6;
        std::vector<std::vector<std::uint8_t>> d(rng() % 5,
                                                 std::vector<std::uint8_t>(beta, 0));
        for (auto& r : d)
            for (auto& v : r) v = static_cast<std::uint8_t>(rng() & 3u);
        auto tor = torsion(d, beta);
        std::set<std::vector<std::uint8_t>> span;
        for (std::uint32_t mask = 0; mask < (1u << tor.size()); ++mask) {
            std::vector<std::uint8_t> acc(beta, 0);
            for (std::size_t i = 0; i < tor.size(); ++i)
                if (mask & (1u << i))
                    for (std::size_t j = 0; j < beta; ++j) acc[j] ^= tor[i][j];
            span.insert(std::move(acc));
        }
        for (const auto& r : residue(d, beta)) {
            if (!span.count(r)) {
                c5 = false;
                c5_detail = "Res not in Tor at instance " + std::to_string(it);
            }
        }
    }
    // Cyclic D: close a random word under shifts, then f-bar | f-bar h-bar.
    for (std::size_t it = 0; it < 120; ++it) {
        std::size_t beta = 1 + 2 * (rng() % 4);  // odd
        std::vector<std::uint8_t> w(beta, 0);
        for (auto& v : w) v = static_cast<std::uint8_t>(rng() & 3u);
        std::vector<std::vector<std::uint8_t>> d;
        for (std::size_t s = 0; s < beta; ++s) {
            d.push_back(w);
            std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
        }
        BinaryPoly tg = gen_poly_binary_cyclic(torsion(d, beta), beta);
        BinaryPoly rg = gen_poly_binary_cyclic(residue(d, beta), beta);
        if (!tg.divides(rg)) {
            c5 = false;
            c5_detail = "gen(Tor) does not divide gen(Res) at instance " + std::to_string(it);
        }
    }
    report(5, "torsion/residue laws", c5, c5_detail);

    // --- Criterion 6: standard-form block shape + mutual span --------------
    bool c6 = true;
    std::string c6_detail;
    for (std::size_t it = 0; it < 120 && c6; ++it) {
        std::size_t alpha = rng() % 5, beta = rng() % 5;
        MixedMatrix m = random_matrix(rng, alpha, beta, rng() % 6);
        StandardForm sf = standard_form(m);
        const auto& rows = sf.matrix.rows;
        auto fail = [&](const std::string& why) {
            c6 = false;
            c6_detail = why + " at instance " + std::to_string(it);
        };
        if (rows.size() != sf.gamma + sf.delta) fail("row count");
        std::size_t free_y = beta - (sf.gamma - sf.kappa) - sf.delta;
        for (std::size_t i = 0; i < sf.gamma && c6; ++i) {
            if (!scale(2, rows[i]).is_zero()) fail("order-two block");
            for (std::size_t j = 0; j < sf.kappa; ++j)
                if (rows[i].x[j] != (i == j ? 1 : 0) && i < sf.kappa) fail("I_kappa");
            if (i >= sf.kappa) {
                for (std::size_t j = 0; j < alpha; ++j)
                    if (rows[i].x[j] != 0) fail("zero X block");
                for (std::size_t j = 0; j < sf.gamma - sf.kappa; ++j)
                    if (rows[i].y[free_y + j] != (i - sf.kappa == j ? 2 : 0)) fail("2I block");
            }
        }
        for (std::size_t i = sf.gamma; i < rows.size() && c6; ++i) {
            for (std::size_t j = 0; j < sf.delta; ++j)
                if (rows[i].y[free_y + (sf.gamma - sf.kappa) + j] != (i - sf.gamma == j ? 1 : 0))
                    fail("I_delta");
            for (std::size_t j = 0; j < sf.gamma - sf.kappa; ++j)
                if (rows[i].y[free_y + j] > 1) fail("R block range");
        }
        if (!c6) break;
        // Mutual membership against the column-permuted original.
        MixedMatrix permuted{alpha, beta, {}};
        for (const auto& r : m.rows) {
            MixedWord p = zero_word(alpha, beta);
            for (std::size_t i = 0; i < alpha; ++i) p.x[i] = r.x[sf.perm_x[i]];
            for (std::size_t j = 0; j < beta; ++j) p.y[j] = r.y[sf.perm_y[j]];
            permuted.rows.push_back(std::move(p));
        }
        for (const auto& r : rows)
            if (!member(permuted, r)) fail("standard row not in original span");
        for (const auto& r : permuted.rows)
            if (!member(sf.matrix, r)) fail("original row not in standard span");
    }
    if (c6) c6_detail = "120 instances";
    report(6, "standard form", c6, c6_detail);

    // --- Criterion 7: alpha = 0 recovers every coprime (f, h) pair ---------
    bool c7 = true;
    std::string c7_detail;
    std::size_t pairs = 0;
    for (std::size_t b : {1, 3, 7}) {
        auto divs = binary_divisors(b);
        for (const auto& fbar : divs) {
            for (const auto& hbar : divs) {
                if (!BinaryPoly::gcd(fbar, hbar).is_one()) continue;
                QuatPoly f = hensel_lift(fbar, b);
                QuatPoly h = hensel_lift(hbar, b);
                CyclicGenerators g{0, b, BinaryPoly::zero(), BinaryPoly::zero(), f, h};
                CyclicGenerators got = compute_generators(reconstruct(g));
                if (!(got.f == f) || !(got.h == h)) {
                    c7 = false;
                    c7_detail = "pair (" + fbar.to_coeff_string() + ", " +
                                hbar.to_coeff_string() + ") at beta=" + std::to_string(b);
                }
                ++pairs;
            }
        }
    }
    if (c7) c7_detail = std::to_string(pairs) + " pairs";
    report(7, "alpha=0 specialization", c7, c7_detail);

    // --- Criterion 8: worked micro-example + CLI golden bytes --------------
    bool c8 = true;
    std::string c8_detail;
    {
        AdditiveCode c{MixedMatrix{1, 1, {MixedWord{{1}, {2}}}}};
        CyclicGenerators g = compute_generators(c);
        bool fields = g.b == BinaryPoly::from_coeff_string("1 1") &&
                      g.l == BinaryPoly::one() && g.f == QuatPoly::one() &&
                      g.h == QuatPoly::from_coeff_string("3 1");
        if (!fields) {
            c8 = false;
            c8_detail = "tuple mismatch";
        }
        std::string path = "acceptance_micro_example.txt";
        {
            std::ofstream f(path);
            f << "1 1\n1 | 2\n";
        }
        std::ostringstream out, err;
        int rc = cli::run({"generators", path}, out, err);
        std::remove(path.c_str());
        if (rc != 0 || out.str() != "b: 1 1\nl: 1\nf: 1\nh: 3 1\n") {
            c8 = false;
            c8_detail = "CLI golden output mismatch";
        }
    }
    report(8, "worked micro-example", c8, c8_detail);

    // --- Criterion 9: l well-definedness on all small-corpus instances -----
    bool c9 = true;
    std::string c9_detail;
    std::size_t swept = 0;
    for (const auto& e : corpus) {
        CodeType ty = code_type(e.code.gens);
        if (ty.gamma + 2 * ty.delta > 12) continue;  // |C| <= 2^12 only
        if (e.computed.alpha == 0) continue;         // l fixed to 0 by convention
        const auto& g = e.computed;
        QuatPoly p = (g.f * g.h + QuatPoly::from_coeff_string("2") * g.f)
                         .mod(QuatPoly::x_pow_minus_one(g.beta));
        std::vector<std::uint8_t> t(g.beta, 0);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) t[i] = p.coeffs()[i];
        bool found = false;
        for (const auto& w : enumerate_code(e.code)) {
            if (w.y != t) continue;
            found = true;
            if (!(BinaryPoly(std::vector<std::uint8_t>(w.x)).mod(g.b) == g.l)) {
                c9 = false;
                c9_detail = "divergent l at alpha=" + std::to_string(g.alpha) +
                            " beta=" + std::to_string(g.beta);
            }
        }
        if (!found) {
            c9 = false;
            c9_detail = "no preimage found in enumeration";
        }
        ++swept;
    }
    if (c9) c9_detail = std::to_string(swept) + " instances swept";
    report(9, "l well-definedness", c9, c9_detail);

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criteria failed\n");
    return g_failures == 0 ? 0 : 1;
}
