#include "z2z4/cyclicgen.hpp"

#include <cassert>
#include <numeric>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

void require_odd_beta(std::size_t beta) {
    if (beta == 0 || beta % 2 == 0)
        throw EvenLength("beta must be odd, got " + std::to_string(beta));
}

std::vector<std::uint8_t> word_of_quat(const QuatPoly& p, std::size_t n) {
    assert(p.is_zero() || p.degree() < n);
    std::vector<std::uint8_t> w(n, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) w[i] = p.coeffs()[i];
    return w;
}

std::vector<std::uint8_t> word_of_bin(const BinaryPoly& p, std::size_t n) {
    assert(p.is_zero() || p.degree() < n);
    std::vector<std::uint8_t> w(n, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) w[i] = p.coeffs()[i];
    return w;
}

QuatPoly mixed_y_poly(const QuatPoly& f, const QuatPoly& h, std::size_t beta) {
    QuatPoly two_f = QuatPoly({2}) * f;
    return (f * h + two_f).mod(QuatPoly::x_pow_minus_one(beta));
}

}  // namespace

std::string ConditionReport::summary() const {
    auto line = [](const char* name, const Entry& e) {
        return std::string(name) + ": " + (e.pass ? "pass" : "FAIL") +
               (e.detail.empty() ? "" : " (" + e.detail + ")");
    };
    return line("C1", c1) + "\n" + line("C2", c2) + "\n" + line("C3", c3) + "\n" + line("C4", c4);
}

CyclicGenerators compute_generators(const AdditiveCode& c) {
    require_odd_beta(c.beta());
    if (!is_cyclic(c)) throw NotCyclic("input code is not cyclic");
    const std::size_t alpha = c.alpha(), beta = c.beta();

    // Steps 1-2: generator polynomials of the torsion and residue codes of
    // the quaternary projection.
    auto cy = puncture_y(c);
    BinaryPoly fbar = gen_poly_binary_cyclic(torsion(cy, beta), beta);
    BinaryPoly fhbar = gen_poly_binary_cyclic(residue(cy, beta), beta);
    BinaryPoly hbar = fhbar.exact_div(fbar);  // Res is contained in Tor

    // Step 3: Hensel lifts.
    QuatPoly f = hensel_lift(fbar, beta);
    QuatPoly h = hensel_lift(hbar, beta);

    // Step 4: generator polynomial of C_0 = {w : (w | 0) in C}.
    BinaryPoly b, l;
    if (alpha > 0) b = gen_poly_binary_cyclic(kernel_x(c.gens), alpha);

    // Step 5: a codeword whose Y-part is f*h + 2f.
    MixedWord v;
    try {
        v = find_preimage_with_y(c.gens, word_of_quat(mixed_y_poly(f, h, beta), beta));
    } catch (const NoSolution&) {
        throw InternalInconsistency("f*h + 2f has no preimage in the code");
    }

    // Step 6: l = theta(v_X) mod b.
    if (alpha > 0) l = BinaryPoly(v.x).mod(b);
    return CyclicGenerators{alpha, beta, std::move(b), std::move(l), std::move(f), std::move(h)};
}

ConditionReport verify_conditions(const CyclicGenerators& g) {
    ConditionReport rep;

    // (C1) f and h are coprime divisors of x^beta - 1.
    if (g.beta == 0 || g.beta % 2 == 0) {
        rep.c1 = {false, "beta must be odd"};
    } else if (g.f.is_zero() || g.h.is_zero()) {
        rep.c1 = {false, "f and h must be nonzero"};
    } else if (!g.f.is_monic() || !g.h.is_monic()) {
        rep.c1 = {false, "f and h must be monic"};
    } else {
        BinaryPoly fbar = g.f.reduce_mod2(), hbar = g.h.reduce_mod2();
        BinaryPoly gc = BinaryPoly::gcd(fbar, hbar);
        QuatPoly rem = QuatPoly::divmod(QuatPoly::x_pow_minus_one(g.beta), g.f * g.h).second;
        if (!gc.is_one()) {
            rep.c1 = {false, "gcd(f mod 2, h mod 2) = " + gc.to_coeff_string()};
        } else if (!rem.is_zero()) {
            rep.c1 = {false, "x^beta - 1 mod f*h = " + rem.to_coeff_string()};
        } else {
            rep.c1 = {true, ""};
        }
    }

    // (C2) b divides x^alpha - 1 (vacuous for alpha == 0).
    if (g.alpha == 0) {
        rep.c2 = {true, "alpha = 0"};
    } else if (g.b.is_zero()) {
        rep.c2 = {false, "b = 0"};
    } else {
        BinaryPoly rem = BinaryPoly::x_pow_minus_one(g.alpha).mod(g.b);
        rep.c2 = rem.is_zero() ? ConditionReport::Entry{true, ""}
                               : ConditionReport::Entry{false,
                                                        "x^alpha - 1 mod b = " +
                                                            rem.to_coeff_string()};
    }

    // (C3) deg l < deg b; l == 0 always passes.
    if (g.l.is_zero()) {
        rep.c3 = {true, "l = 0"};
    } else if (g.b.is_zero() || g.l.degree() >= g.b.degree()) {
        rep.c3 = {false, "deg l = " + std::to_string(g.l.degree())};
    } else {
        rep.c3 = {true, ""};
    }

    // (C4) b divides ((x^beta - 1)/fbar) * l over Z2.
    if (!rep.c1.pass) {
        rep.c4 = {false, "skipped: C1 failed"};
    } else {
        BinaryPoly fbar = g.f.reduce_mod2();
        BinaryPoly q = BinaryPoly::x_pow_minus_one(g.beta).exact_div(fbar);
        BinaryPoly z = q * g.l;
        if (g.b.is_zero()) {
            rep.c4 = z.is_zero() ? ConditionReport::Entry{true, "b = 0, l = 0"}
                                 : ConditionReport::Entry{false, "b = 0 but l != 0"};
        } else {
            BinaryPoly rem = z.mod(g.b);
            rep.c4 = rem.is_zero()
                         ? ConditionReport::Entry{true, ""}
                         : ConditionReport::Entry{false, "remainder " + rem.to_coeff_string()};
        }
    }
    return rep;
}

AdditiveCode reconstruct(const CyclicGenerators& g) {
    require_odd_beta(g.beta);
    ConditionReport rep = verify_conditions(g);
    if (!rep.all_pass()) throw InvalidGenerators("generator tuple is invalid:\n" + rep.summary());

    const std::size_t alpha = g.alpha, beta = g.beta;
    MixedMatrix m;
    m.alpha = alpha;
    m.beta = beta;

    if (alpha > 0) {
        BinaryPoly bred = g.b.mod(BinaryPoly::x_pow_minus_one(alpha));
        if (!bred.is_zero()) {  // b = x^alpha - 1 reduces to the zero word
            MixedWord w{word_of_bin(bred, alpha), std::vector<std::uint8_t>(beta, 0)};
            for (std::size_t i = 0; i < alpha; ++i) {
                m.rows.push_back(w);
                w = shift(w);
            }
        }
    }

    QuatPoly p = mixed_y_poly(g.f, g.h, beta);
    BinaryPoly lred =
        alpha > 0 ? g.l.mod(BinaryPoly::x_pow_minus_one(alpha)) : BinaryPoly::zero();
    MixedWord mg{word_of_bin(lred, alpha), word_of_quat(p, beta)};
    if (!mg.is_zero()) {
        // The mixed generator has shift period lcm(alpha, beta), not beta.
        std::size_t period = alpha == 0 ? beta : std::lcm(alpha, beta);
        for (std::size_t j = 0; j < period; ++j) {
            m.rows.push_back(mg);
            mg = shift(mg);
        }
    }
    return AdditiveCode{std::move(m)};
}

}  // namespace z2z4
