#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "z2z4/errors.hpp"

namespace z2z4 {

/// Polynomial over Z2, stored as ascending coefficients with no trailing
/// zeros. The zero polynomial is the empty sequence and has no degree.
class BinaryPoly {
  public:
    BinaryPoly() = default;
    explicit BinaryPoly(std::vector<std::uint8_t> coeffs);

    static BinaryPoly zero() { return BinaryPoly{}; }
    static BinaryPoly one() { return BinaryPoly({1}); }
    /// x^n - 1 == x^n + 1 over Z2; requires n >= 1.
    static BinaryPoly x_pow_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree of a nonzero polynomial; callers must check is_zero() first.
    std::size_t degree() const;
    std::uint8_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }

    friend BinaryPoly operator+(const BinaryPoly& a, const BinaryPoly& b);
    friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
    friend bool operator==(const BinaryPoly& a, const BinaryPoly& b) = default;

    /// a = q*d + r with deg r < deg d; throws DivisionByZero on d == 0.
    static std::pair<BinaryPoly, BinaryPoly> divmod(const BinaryPoly& a, const BinaryPoly& d);
    /// Monic gcd; gcd(0, 0) == 0.
    static BinaryPoly gcd(BinaryPoly a, BinaryPoly b);

    BinaryPoly mod(const BinaryPoly& d) const { return divmod(*this, d).second; }
    /// Exact quotient; throws NotADivisor on a nonzero remainder.
    BinaryPoly exact_div(const BinaryPoly& d) const;
    /// true iff *this divides other (everything divides 0; 0 divides only 0).
    bool divides(const BinaryPoly& other) const;

    std::string to_coeff_string() const;
    std::string to_pretty_string() const;
    static BinaryPoly from_coeff_string(const std::string& s);

  private:
    std::vector<std::uint8_t> coeffs_;
};

/// Polynomial over Z4, same storage conventions as BinaryPoly.
class QuatPoly {
  public:
    QuatPoly() = default;
    explicit QuatPoly(std::vector<std::uint8_t> coeffs);

    static QuatPoly zero() { return QuatPoly{}; }
    static QuatPoly one() { return QuatPoly({1}); }
    /// x^n - 1 == x^n + 3 over Z4; requires n >= 1.
    static QuatPoly x_pow_minus_one(std::size_t n);
    /// Coefficient-wise lift {0,1} of a binary polynomial.
    static QuatPoly lift(const BinaryPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    std::size_t degree() const;
    std::uint8_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }
    std::uint8_t leading_coeff() const;
    bool is_monic() const { return !is_zero() && leading_coeff() == 1; }

    friend QuatPoly operator+(const QuatPoly& a, const QuatPoly& b);
    friend QuatPoly operator-(const QuatPoly& a, const QuatPoly& b);
    friend QuatPoly operator*(const QuatPoly& a, const QuatPoly& b);
    friend bool operator==(const QuatPoly& a, const QuatPoly& b) = default;

    /// Requires a unit leading coefficient on d (1 or 3); throws
    /// NonUnitLeadingCoefficient otherwise, DivisionByZero on d == 0.
    static std::pair<QuatPoly, QuatPoly> divmod(const QuatPoly& a, const QuatPoly& d);

    QuatPoly mod(const QuatPoly& d) const { return divmod(*this, d).second; }
    /// Scale by a unit so the leading coefficient becomes 1.
    QuatPoly make_monic() const;
    BinaryPoly reduce_mod2() const;

    std::string to_coeff_string() const;
    std::string to_pretty_string() const;
    static QuatPoly from_coeff_string(const std::string& s);

  private:
    std::vector<std::uint8_t> coeffs_;
};

/// Hensel lift via the Graeffe even/odd split: for fbar a monic divisor of
/// x^beta - 1 over Z2 (beta odd), returns the monic f over Z4 with
/// f == fbar (mod 2) and f | x^beta - 1 over Z4.
QuatPoly hensel_lift(const BinaryPoly& fbar, std::size_t beta);

/// Generator polynomial of the binary cyclic code spanned by the given
/// length-n words: gcd of x^n - 1 with all word polynomials. The zero code
/// yields x^n - 1 by convention. The span must be closed under cyclic shift.
BinaryPoly gen_poly_binary_cyclic(const std::vector<std::vector<std::uint8_t>>& words,
                                  std::size_t n);

}  // namespace z2z4
