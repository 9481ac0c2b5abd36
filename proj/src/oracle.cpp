#include "z2z4/oracle.hpp"

#include <random>

#include "z2z4/errors.hpp"

namespace z2z4 {

std::set<MixedWord> brute_force_span(const MixedMatrix& m) {
    if (m.rows.size() > 12)
        throw TooManyRows("brute-force span is capped at 12 rows, got " +
                          std::to_string(m.rows.size()));
    std::set<MixedWord> words;
    std::vector<std::uint8_t> coeff(m.rows.size(), 0);
    while (true) {
        MixedWord w = zero_word(m.alpha, m.beta);
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (coeff[i]) w = add(w, scale(coeff[i], m.rows[i]));
        words.insert(std::move(w));
        std::size_t i = 0;
        for (; i < coeff.size(); ++i) {
            coeff[i] = static_cast<std::uint8_t>((coeff[i] + 1) & 3u);
            if (coeff[i]) break;
        }
        if (i == coeff.size()) break;
    }
    return words;
}

CyclicGenerators sample_valid_generators(std::size_t alpha, std::size_t beta,
                                         std::uint64_t seed) {
    if (beta == 0 || beta % 2 == 0)
        throw EvenLength("beta must be odd, got " + std::to_string(beta));

    // mt19937_64 is fully specified by the standard, so one seed maps to the
    // same tuple everywhere.
    std::seed_seq seq{seed, static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(beta)};
    std::mt19937_64 rng(seq);
    auto random_poly = [&rng](std::size_t len) {
        std::vector<std::uint8_t> c(len, 0);
        for (auto& v : c) v = static_cast<std::uint8_t>(rng() & 1u);
        return BinaryPoly(std::move(c));
    };

    // A gcd with the squarefree x^beta - 1 is a divisor, and any split of it
    // by a further gcd is automatically a coprime pair.
    BinaryPoly xb1 = BinaryPoly::x_pow_minus_one(beta);
    BinaryPoly d = BinaryPoly::gcd(xb1, random_poly(beta));
    BinaryPoly fbar = BinaryPoly::gcd(d, random_poly(beta));
    BinaryPoly hbar = d.exact_div(fbar);
    QuatPoly f = hensel_lift(fbar, beta);
    QuatPoly h = hensel_lift(hbar, beta);

    BinaryPoly b, l;
    if (alpha > 0) {
        b = BinaryPoly::gcd(BinaryPoly::x_pow_minus_one(alpha), random_poly(alpha));
        // (C4) forces l to be a multiple of b / gcd(b, (x^beta - 1)/fbar).
        BinaryPoly q = xb1.exact_div(fbar);
        BinaryPoly base = b.exact_div(BinaryPoly::gcd(b, q));
        l = (base * random_poly(alpha)).mod(b);
    }

    CyclicGenerators g{alpha, beta, std::move(b), std::move(l), std::move(f), std::move(h)};
    if (!verify_conditions(g).all_pass())
        throw InternalInconsistency("sampled tuple fails its own conditions");
    return g;
}

}  // namespace z2z4
