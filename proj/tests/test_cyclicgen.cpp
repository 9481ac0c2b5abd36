#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "z2z4/cyclicgen.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/oracle.hpp"

using namespace z2z4;

namespace {

BinaryPoly bp(std::initializer_list<std::uint8_t> c) { return BinaryPoly(std::vector<std::uint8_t>(c)); }
QuatPoly qp(std::initializer_list<std::uint8_t> c) { return QuatPoly(std::vector<std::uint8_t>(c)); }

AdditiveCode code(std::size_t alpha, std::size_t beta, std::vector<MixedWord> rows) {
    return AdditiveCode{MixedMatrix{alpha, beta, std::move(rows)}};
}

}  // namespace

TEST_CASE("worked micro-example: the code {(0|0),(1|2)}") {
    CyclicGenerators g = compute_generators(code(1, 1, {MixedWord{{1}, {2}}}));
    CHECK(g.b == bp({1, 1}));
    CHECK(g.l == BinaryPoly::one());
    CHECK(g.f == QuatPoly::one());
    CHECK(g.h == qp({3, 1}));
    CHECK(verify_conditions(g).all_pass());
    CHECK(equals(reconstruct(g), code(1, 1, {MixedWord{{1}, {2}}})));
}

TEST_CASE("zero code conventions") {
    CyclicGenerators g = compute_generators(code(2, 3, {}));
    CHECK(g.b == BinaryPoly::x_pow_minus_one(2));
    CHECK(g.l.is_zero());
    CHECK(g.f == QuatPoly::x_pow_minus_one(3));
    CHECK(g.h == QuatPoly::one());
    CHECK(verify_conditions(g).all_pass());
    auto rec = reconstruct(g);
    CHECK(equals(rec, code(2, 3, {})));
}

TEST_CASE("full code") {
    std::vector<MixedWord> rows;
    for (std::size_t i = 0; i < 2; ++i) {
        MixedWord w = zero_word(2, 3);
        w.x[i] = 1;
        rows.push_back(w);
    }
    for (std::size_t j = 0; j < 3; ++j) {
        MixedWord w = zero_word(2, 3);
        w.y[j] = 1;
        rows.push_back(w);
    }
    CyclicGenerators g = compute_generators(code(2, 3, rows));
    CHECK(g.b == BinaryPoly::one());
    CHECK(g.l.is_zero());
    CHECK(g.f == QuatPoly::one());
    CHECK(g.h == QuatPoly::one());
    CHECK(equals(reconstruct(g), code(2, 3, rows)));
}

TEST_CASE("compute_generators error paths") {
    CHECK_THROWS_AS(compute_generators(code(1, 2, {})), EvenLength);
    CHECK_THROWS_AS(compute_generators(code(2, 1, {MixedWord{{1, 0}, {0}}})), NotCyclic);
}

TEST_CASE("condition verification failures") {
    SUBCASE("C3: deg l not below deg b") {
        CyclicGenerators g{1, 1, bp({1, 1}), bp({0, 1}), QuatPoly::one(), qp({3, 1})};
        ConditionReport rep = verify_conditions(g);
        CHECK_FALSE(rep.c3.pass);
        CHECK_FALSE(rep.all_pass());
        CHECK_THROWS_AS(reconstruct(g), InvalidGenerators);
    }
    SUBCASE("C1: f and h share a factor") {
        CyclicGenerators g{0, 3, BinaryPoly::zero(), BinaryPoly::zero(), qp({3, 1}), qp({3, 1})};
        ConditionReport rep = verify_conditions(g);
        CHECK_FALSE(rep.c1.pass);
    }
    SUBCASE("C2: b does not divide x^alpha - 1") {
        CyclicGenerators g{2, 1, bp({0, 1}), BinaryPoly::zero(), QuatPoly::one(), qp({3, 1})};
        CHECK_FALSE(verify_conditions(g).c2.pass);
    }
    SUBCASE("C4: l not compatible with b and f") {
        // alpha = 2, b = x^2-1, f = h-side full: (x^3-1)/fbar = 1, so C4
        // needs b | l; l = 1 fails while deg l < deg b holds.
        CyclicGenerators g{2, 3, BinaryPoly::x_pow_minus_one(2), BinaryPoly::one(),
                           QuatPoly::x_pow_minus_one(3), QuatPoly::one()};
        ConditionReport rep = verify_conditions(g);
        CHECK(rep.c1.pass);
        CHECK(rep.c2.pass);
        CHECK(rep.c3.pass);
        CHECK_FALSE(rep.c4.pass);
    }
}

TEST_CASE("reconstruct worked examples") {
    SUBCASE("alpha = beta = 1 tuple") {
        CyclicGenerators g{1, 1, bp({1, 1}), BinaryPoly::one(), QuatPoly::one(), qp({3, 1})};
        CHECK(equals(reconstruct(g), code(1, 1, {MixedWord{{1}, {2}}})));
    }
    SUBCASE("zero tuple gives the zero code") {
        CyclicGenerators g{1, 1, BinaryPoly::x_pow_minus_one(1), BinaryPoly::zero(),
                           QuatPoly::x_pow_minus_one(1), QuatPoly::one()};
        CHECK(equals(reconstruct(g), code(1, 1, {})));
    }
    SUBCASE("alpha = 0: <f h + 2f> = <2> in Z4") {
        CyclicGenerators g{0, 1, BinaryPoly::zero(), BinaryPoly::zero(), QuatPoly::one(),
                           qp({3, 1})};
        AdditiveCode rec = reconstruct(g);
        CHECK(equals(rec, code(0, 1, {MixedWord{{}, {2}}})));
    }
}

TEST_CASE("reconstructed codes are cyclic and satisfy the type bound") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        for (std::size_t alpha : {0, 1, 2, 4, 5}) {
            for (std::size_t beta : {1, 3, 7}) {
                CyclicGenerators g = sample_valid_generators(alpha, beta, seed);
                AdditiveCode c = reconstruct(g);
                CHECK(is_cyclic(c));
            }
        }
    }
}

TEST_CASE("round trip and idempotence on sampled tuples") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        for (std::size_t alpha : {0, 2, 3}) {
            for (std::size_t beta : {1, 3, 5}) {
                CyclicGenerators g = sample_valid_generators(alpha, beta, seed);
                AdditiveCode c = reconstruct(g);
                CyclicGenerators got = compute_generators(c);
                CHECK(verify_conditions(got).all_pass());
                CHECK(equals(reconstruct(got), c));
                CHECK(compute_generators(reconstruct(got)) == got);
            }
        }
    }
}

TEST_CASE("l is independent of the step-5 preimage choice") {
    std::mt19937_64 rng(61);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t alpha = 1 + rng() % 4;
        std::size_t beta = 1 + 2 * (rng() % 3);
        CyclicGenerators g = sample_valid_generators(alpha, beta, seed);
        AdditiveCode c = reconstruct(g);
        CyclicGenerators got = compute_generators(c);
        // Sweep every codeword whose Y-part matches f*h + 2f and check the
        // reduction mod b always lands on the same l.
        QuatPoly p = (got.f * got.h + qp({2}) * got.f).mod(QuatPoly::x_pow_minus_one(beta));
        std::vector<std::uint8_t> t(beta, 0);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) t[i] = p.coeffs()[i];
        bool found_any = false;
        for (const auto& w : enumerate_code(c)) {
            if (w.y != t) continue;
            found_any = true;
            CHECK(BinaryPoly(std::vector<std::uint8_t>(w.x)).mod(got.b) == got.l);
        }
        CHECK(found_any);
    }
}

TEST_CASE("alpha = 0 specialization recovers the (f, h) pair exactly") {
    for (std::size_t beta : {1, 3, 7}) {
        // All monic divisors of x^beta - 1 over Z2 by exhaustive trial division.
        BinaryPoly xb1 = BinaryPoly::x_pow_minus_one(beta);
        std::vector<BinaryPoly> divisors;
        for (std::uint32_t bits = 1; bits < (1u << (beta + 1)); ++bits) {
            std::vector<std::uint8_t> c;
            for (std::size_t i = 0; i <= beta; ++i) c.push_back((bits >> i) & 1u);
            BinaryPoly d(std::move(c));
            if (d.divides(xb1)) divisors.push_back(std::move(d));
        }
        for (const auto& fbar : divisors) {
            for (const auto& hbar : divisors) {
                if (!BinaryPoly::gcd(fbar, hbar).is_one()) continue;
                CyclicGenerators g{0, beta, BinaryPoly::zero(), BinaryPoly::zero(),
                                   hensel_lift(fbar, beta), hensel_lift(hbar, beta)};
                REQUIRE(verify_conditions(g).all_pass());
                CyclicGenerators got = compute_generators(reconstruct(g));
                CHECK(got.f == g.f);
                CHECK(got.h == g.h);
            }
        }
    }
}
