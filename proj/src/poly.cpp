#include "z2z4/poly.hpp"

#include <cassert>
#include <sstream>

namespace z2z4 {

namespace {

void trim2(std::vector<std::uint8_t>& c) {
    for (auto& v : c) v = static_cast<std::uint8_t>(v & 1u);
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim4(std::vector<std::uint8_t>& c) {
    for (auto& v : c) v = static_cast<std::uint8_t>(v & 3u);
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<std::uint8_t> parse_tokens(const std::string& s, unsigned modulus) {
    std::istringstream in(s);
    std::vector<std::uint8_t> coeffs;
    std::string tok;
    while (in >> tok) {
        if (tok.size() != 1 || tok[0] < '0' || tok[0] >= static_cast<char>('0' + modulus))
            throw NotADivisor("bad coefficient token '" + tok + "' (mod " +
                              std::to_string(modulus) + ")");
        coeffs.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
    }
    return coeffs;
}

template <class P>
std::string coeff_string(const P& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += static_cast<char>('0' + p.coeffs()[i]);
    }
    return out;
}

template <class P>
std::string pretty_string(const P& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        auto c = p.coeffs()[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += static_cast<char>('0' + c);
        } else {
            if (c != 1) out += static_cast<char>('0' + c);
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

BinaryPoly::BinaryPoly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim2(coeffs_);
}

BinaryPoly BinaryPoly::x_pow_minus_one(std::size_t n) {
    assert(n >= 1);
    std::vector<std::uint8_t> c(n + 1, 0);
    c[0] = 1;
    c[n] = 1;
    return BinaryPoly(std::move(c));
}

std::size_t BinaryPoly::degree() const {
    assert(!is_zero());
    return coeffs_.size() - 1;
}

BinaryPoly operator+(const BinaryPoly& a, const BinaryPoly& b) {
    std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint8_t>(a.coeff(i) ^ b.coeff(i));
    return BinaryPoly(std::move(c));
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
    if (a.is_zero() || b.is_zero()) return BinaryPoly{};
    std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i]) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] ^= b.coeffs_[j];
    }
    return BinaryPoly(std::move(c));
}

std::pair<BinaryPoly, BinaryPoly> BinaryPoly::divmod(const BinaryPoly& a, const BinaryPoly& d) {
    if (d.is_zero()) throw DivisionByZero("binary polynomial division by zero");
    if (a.is_zero() || a.degree() < d.degree()) return {BinaryPoly{}, a};
    std::vector<std::uint8_t> rem = a.coeffs_;
    std::vector<std::uint8_t> quo(a.degree() - d.degree() + 1, 0);
    for (std::size_t k = rem.size(); k-- > d.coeffs_.size() - 1;) {
        if (!rem[k]) continue;
        std::size_t s = k - (d.coeffs_.size() - 1);
        quo[s] = 1;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[s + j] ^= d.coeffs_[j];
    }
    return {BinaryPoly(std::move(quo)), BinaryPoly(std::move(rem))};
}

BinaryPoly BinaryPoly::gcd(BinaryPoly a, BinaryPoly b) {
    while (!b.is_zero()) {
        BinaryPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinaryPoly BinaryPoly::exact_div(const BinaryPoly& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero())
        throw NotADivisor("(" + d.to_coeff_string() + ") does not divide (" + to_coeff_string() +
                          ") over Z2");
    return q;
}

bool BinaryPoly::divides(const BinaryPoly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

std::string BinaryPoly::to_coeff_string() const { return coeff_string(*this); }
std::string BinaryPoly::to_pretty_string() const { return pretty_string(*this); }

BinaryPoly BinaryPoly::from_coeff_string(const std::string& s) {
    return BinaryPoly(parse_tokens(s, 2));
}

QuatPoly::QuatPoly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim4(coeffs_);
}

QuatPoly QuatPoly::x_pow_minus_one(std::size_t n) {
    assert(n >= 1);
    std::vector<std::uint8_t> c(n + 1, 0);
    c[0] = 3;
    c[n] = 1;
    return QuatPoly(std::move(c));
}

QuatPoly QuatPoly::lift(const BinaryPoly& p) { return QuatPoly(p.coeffs()); }

std::size_t QuatPoly::degree() const {
    assert(!is_zero());
    return coeffs_.size() - 1;
}

std::uint8_t QuatPoly::leading_coeff() const {
    assert(!is_zero());
    return coeffs_.back();
}

QuatPoly operator+(const QuatPoly& a, const QuatPoly& b) {
    std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint8_t>((a.coeff(i) + b.coeff(i)) & 3u);
    return QuatPoly(std::move(c));
}

QuatPoly operator-(const QuatPoly& a, const QuatPoly& b) {
    std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint8_t>((a.coeff(i) + 4 - b.coeff(i)) & 3u);
    return QuatPoly(std::move(c));
}

QuatPoly operator*(const QuatPoly& a, const QuatPoly& b) {
    if (a.is_zero() || b.is_zero()) return QuatPoly{};
    std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i]) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = static_cast<std::uint8_t>((c[i + j] + a.coeffs_[i] * b.coeffs_[j]) & 3u);
    }
    return QuatPoly(std::move(c));
}

std::pair<QuatPoly, QuatPoly> QuatPoly::divmod(const QuatPoly& a, const QuatPoly& d) {
    if (d.is_zero()) throw DivisionByZero("quaternary polynomial division by zero");
    if (d.leading_coeff() % 2 == 0)
        throw NonUnitLeadingCoefficient("divisor (" + d.to_coeff_string() +
                                        ") has non-unit leading coefficient");
    // 1 and 3 are their own inverses mod 4.
    const std::uint8_t inv = d.leading_coeff();
    if (a.is_zero() || a.degree() < d.degree()) return {QuatPoly{}, a};
    std::vector<std::uint8_t> rem = a.coeffs_;
    std::vector<std::uint8_t> quo(a.degree() - d.degree() + 1, 0);
    for (std::size_t k = rem.size(); k-- > d.coeffs_.size() - 1;) {
        if (!rem[k]) continue;
        std::size_t s = k - (d.coeffs_.size() - 1);
        std::uint8_t q = static_cast<std::uint8_t>((rem[k] * inv) & 3u);
        quo[s] = q;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
            rem[s + j] = static_cast<std::uint8_t>((rem[s + j] + 4 * 4 - q * d.coeffs_[j]) & 3u);
    }
    return {QuatPoly(std::move(quo)), QuatPoly(std::move(rem))};
}

QuatPoly QuatPoly::make_monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    if (leading_coeff() == 2)
        throw NonUnitLeadingCoefficient("cannot normalize leading coefficient 2");
    std::vector<std::uint8_t> c = coeffs_;
    for (auto& v : c) v = static_cast<std::uint8_t>((v * 3u) & 3u);
    return QuatPoly(std::move(c));
}

BinaryPoly QuatPoly::reduce_mod2() const {
    std::vector<std::uint8_t> c = coeffs_;
    for (auto& v : c) v &= 1u;
    return BinaryPoly(std::move(c));
}

std::string QuatPoly::to_coeff_string() const { return coeff_string(*this); }
std::string QuatPoly::to_pretty_string() const { return pretty_string(*this); }

QuatPoly QuatPoly::from_coeff_string(const std::string& s) {
    return QuatPoly(parse_tokens(s, 4));
}

QuatPoly hensel_lift(const BinaryPoly& fbar, std::size_t beta) {
    if (beta == 0 || beta % 2 == 0)
        throw EvenLength("Hensel lift requires odd beta, got " + std::to_string(beta));
    if (fbar.is_zero()) throw NotADivisor("zero polynomial is not a divisor of x^beta - 1");
    if (!fbar.divides(BinaryPoly::x_pow_minus_one(beta)))
        throw NotADivisor("(" + fbar.to_coeff_string() + ") does not divide x^" +
                          std::to_string(beta) + " - 1 over Z2");
    if (fbar.is_one()) return QuatPoly::one();

    // Graeffe: with g == fbar lifted to {0,1} coefficients and split into
    // even-exponent and odd-exponent parts, f(x^2) = +-(e(x)^2 - o(x)^2).
    QuatPoly g = QuatPoly::lift(fbar);
    std::vector<std::uint8_t> ec(g.coeffs().size(), 0), oc(g.coeffs().size(), 0);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i)
        (i % 2 == 0 ? ec[i] : oc[i]) = g.coeffs()[i];
    QuatPoly e{std::vector<std::uint8_t>(ec)}, o{std::vector<std::uint8_t>(oc)};
    QuatPoly s = e * e - o * o;
    if (s.leading_coeff() != 1) s = QuatPoly::zero() - s;
    // Odd positions of s vanish; the lift sits at the even positions.
    std::vector<std::uint8_t> fc(fbar.degree() + 1, 0);
    for (std::size_t i = 0; i < fc.size(); ++i) fc[i] = s.coeff(2 * i);
    QuatPoly f(std::move(fc));
    assert(f.is_monic());
    assert(f.reduce_mod2() == fbar);
    return f;
}

BinaryPoly gen_poly_binary_cyclic(const std::vector<std::vector<std::uint8_t>>& words,
                                  std::size_t n) {
    assert(n >= 1);
    BinaryPoly g = BinaryPoly::x_pow_minus_one(n);
    for (const auto& w : words) {
        assert(w.size() == n);
        BinaryPoly p{std::vector<std::uint8_t>(w)};
        if (!p.is_zero()) g = BinaryPoly::gcd(g, p);
    }
    return g;
}

}  // namespace z2z4
