#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace colhad {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational &q);
// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(const std::string &text);
// q^k for any integer k; q must be nonzero when k < 0.
Rational power(const Rational &q, std::int64_t k);

// c * X^k with c an exact rational.
struct Monomial {
    Rational coeff{1};
    std::int64_t exponent = 0;

    Monomial() = default;
    Monomial(Rational c, std::int64_t k) : coeff(std::move(c)), exponent(k) {}

    Monomial operator*(const Monomial &o) const { return {coeff * o.coeff, exponent + o.exponent}; }
    bool operator==(const Monomial &o) const { return coeff == o.coeff && exponent == o.exponent; }
    bool operator<(const Monomial &o) const
    {
        if (exponent != o.exponent) {
            return exponent < o.exponent;
        }
        return coeff < o.coeff;
    }
    Rational evaluate(const Rational &x) const { return coeff * power(x, exponent); }
};

// Finitely supported Laurent polynomial in X over Q. Zero coefficients are
// never stored, so structural equality is mathematical equality.
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational &c) { add_term(0, c); }
    LaurentPoly(long c) { add_term(0, Rational(c)); }
    LaurentPoly(int c) { add_term(0, Rational(c)); }
    LaurentPoly(const Monomial &m) { add_term(m.exponent, m.coeff); }
    LaurentPoly(std::initializer_list<std::pair<const std::int64_t, Rational>> init)
    {
        for (const auto &[e, c] : init) {
            add_term(e, c);
        }
    }

    // X^k
    static LaurentPoly x_power(std::int64_t k) { return LaurentPoly(Monomial{Rational(1), k}); }

    bool is_zero() const { return terms_.empty(); }
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(std::int64_t e) const;
    std::int64_t min_exponent() const { return terms_.begin()->first; }
    std::int64_t max_exponent() const { return terms_.rbegin()->first; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    void add_term(std::int64_t e, const Rational &c);

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

    // Multiplication by c*X^k, cheaper than the general product.
    LaurentPoly times(const Monomial &m) const;
    LaurentPoly pow(unsigned k) const;
    // X <- x; x must be nonzero if negative exponents are present.
    Rational evaluate(const Rational &x) const;

    // Human readable, highest exponent last: "1 + 2*X - X^-1".
    std::string to_string() const;

private:
    Terms terms_;
};

// Total order on Laurent polynomials (by exponent/coefficient sequence); used
// only to make containers keyed by polynomials deterministic.
bool lex_less(const LaurentPoly &a, const LaurentPoly &b);

} // namespace colhad
