#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "colhad/configuration.hpp"
#include "colhad/laurent.hpp"

namespace colhad {

// Default truncation order for series comparisons.
inline constexpr std::size_t default_series_order = 12;

Monomial power(const Monomial &m, std::uint64_t k);

// Polynomial in Y whose coefficients are Laurent polynomials in X.
class YPolynomial {
public:
    using Terms = std::map<std::size_t, LaurentPoly>;

    YPolynomial() = default;
    YPolynomial(const LaurentPoly &constant) { add_term(0, constant); }
    // Coefficient `c` at Y^k.
    static YPolynomial term(std::size_t k, const LaurentPoly &c);
    // 1 - m*Y
    static YPolynomial one_minus(const Monomial &m);

    bool is_zero() const { return terms_.empty(); }
    const Terms &terms() const { return terms_; }
    LaurentPoly coefficient(std::size_t k) const;
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    void add_term(std::size_t k, const LaurentPoly &c);

    YPolynomial &operator+=(const YPolynomial &o);
    YPolynomial &operator-=(const YPolynomial &o);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial &b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial &b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial &a, const YPolynomial &b);
    YPolynomial &operator*=(const YPolynomial &o) { return *this = *this * o; }
    friend bool operator==(const YPolynomial &, const YPolynomial &) = default;

    // Y <- m*Y
    YPolynomial scale_y(const Monomial &m) const;
    // X <- x
    YPolynomial substitute_x(const Rational &x) const;

private:
    Terms terms_;
};

// Truncated power series in Y, coefficients indexed by Y-degree 0..order.
class SeriesY {
public:
    explicit SeriesY(std::size_t order) : coeffs_(order + 1) {}
    explicit SeriesY(std::vector<LaurentPoly> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const LaurentPoly &operator[](std::size_t k) const { return coeffs_[k]; }
    LaurentPoly &operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<LaurentPoly> &coefficients() const { return coeffs_; }

    // Both operands must have the same order (OrderMismatch otherwise).
    friend SeriesY operator+(const SeriesY &a, const SeriesY &b);
    friend SeriesY operator*(const SeriesY &a, const SeriesY &b);
    friend bool operator==(const SeriesY &, const SeriesY &) = default;

    SeriesY scale_y(const Monomial &m) const;
    SeriesY truncate(std::size_t order) const;

private:
    std::vector<LaurentPoly> coeffs_;
};

// Coefficientwise product. Throws OrderMismatch.
SeriesY hadamard_series(const SeriesY &a, const SeriesY &b);

// numerator / prod (1 - m_i Y)^{k_i}. Each denominator factor has constant
// term 1, so the Y-expansion exists over Laurent-polynomial coefficients.
class RationalGF {
public:
    using Denominator = std::map<Monomial, unsigned>;

    RationalGF() = default;
    RationalGF(YPolynomial numerator, Denominator denominator = {});

    // The closed form c * prod (1 - n_j Y) / prod (1 - m_i Y).
    static RationalGF from_factors(const LaurentPoly &constant, const std::vector<Monomial> &numerator_factors,
                                   const std::vector<Monomial> &denominator_factors);

    const YPolynomial &numerator() const { return numerator_; }
    const Denominator &denominator() const { return denominator_; }
    YPolynomial denominator_polynomial() const;
    bool is_zero() const { return numerator_.is_zero(); }

    friend RationalGF operator+(const RationalGF &a, const RationalGF &b);
    friend RationalGF operator*(const RationalGF &a, const RationalGF &b);

    RationalGF scale_y(const Monomial &m) const;
    // Throws ZeroSubstitution for x = 0.
    RationalGF substitute_x(const Rational &x) const;

    // Structural equality; see `equal` for the semantic one.
    friend bool operator==(const RationalGF &, const RationalGF &) = default;

private:
    YPolynomial numerator_;
    Denominator denominator_;
};

SeriesY expand(const RationalGF &r, std::size_t order);

// Cross-multiplied polynomial identity.
bool equal(const RationalGF &a, const RationalGF &b);

// X <- x_value, Y <- y_scale(x_value) * Y; all coefficients become constants.
RationalGF substitute(const RationalGF &r, const Rational &x_value, const Monomial &y_scale);

// W^eps_{f,alpha} over the common denominator (1-Y)(1-X^eps Y)...(1-X^{eps L} Y)
// where L is the largest length occurring in f.
RationalGF w_of(const LabelledConfiguration &lc, std::int64_t eps);

// The denominator (1-Y)(1-X^eps Y)...(1-X^{eps n} Y).
RationalGF::Denominator staircase_denominator(std::int64_t eps, std::size_t n);

} // namespace colhad
