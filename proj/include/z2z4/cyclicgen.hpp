#pragma once

#include <cstddef>
#include <string>

#include "z2z4/code.hpp"
#include "z2z4/poly.hpp"

namespace z2z4 {

/// The generator tuple of a Z2Z4-additive cyclic code: the code is
/// <(b | 0), (l | f*h + 2f)> inside Z2[x]/(x^alpha-1) x Z4[x]/(x^beta-1).
/// For alpha == 0 both b and l are zero by convention.
struct CyclicGenerators {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    BinaryPoly b;
    BinaryPoly l;
    QuatPoly f;
    QuatPoly h;

    friend bool operator==(const CyclicGenerators&, const CyclicGenerators&) = default;
};

/// Per-condition verification result with division-remainder witnesses.
struct ConditionReport {
    struct Entry {
        bool pass = false;
        std::string detail;
    };
    Entry c1;  // f, h coprime divisors of x^beta - 1
    Entry c2;  // b | x^alpha - 1
    Entry c3;  // deg l < deg b (l == 0 always passes)
    Entry c4;  // b | ((x^beta - 1)/fbar) * l over Z2

    bool all_pass() const { return c1.pass && c2.pass && c3.pass && c4.pass; }
    std::string summary() const;
};

/// The six-step generator-polynomial computation. Requires beta odd and a
/// cyclic input code.
CyclicGenerators compute_generators(const AdditiveCode& c);

ConditionReport verify_conditions(const CyclicGenerators& g);

/// Builds the code generated by (b | 0) and (l | f*h + 2f): the X-only
/// generator contributes alpha shifts, the mixed generator lcm(alpha, beta)
/// shifts. Throws InvalidGenerators when a condition fails.
AdditiveCode reconstruct(const CyclicGenerators& g);

}  // namespace z2z4
