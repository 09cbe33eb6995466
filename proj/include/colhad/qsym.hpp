#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "colhad/coloured_permutation.hpp"
#include "colhad/laurent.hpp"
#include "colhad/shuffle_algebra.hpp"

namespace colhad {

// x_i^{(j)}: index i >= 1, colour j.
struct QVariable {
    std::uint32_t index = 1;
    Colour colour = 0;

    friend bool operator==(const QVariable &, const QVariable &) = default;
    friend auto operator<=>(const QVariable &, const QVariable &) = default;
};

// Sorted (variable, exponent) pairs with positive exponents.
using Multidegree = std::vector<std::pair<QVariable, std::uint32_t>>;

// Multidegree of the product of two monomials.
Multidegree multiply(const Multidegree &a, const Multidegree &b);

// A coloured quasisymmetric function with every variable x_i^{(j)}, i > cutoff,
// set to zero. Truncation is a ring homomorphism, so products of truncations
// are truncations of products.
class TruncatedQSym {
public:
    TruncatedQSym(std::uint32_t cutoff, Colour colours) : cutoff_(cutoff), colours_(colours) {}

    std::uint32_t cutoff() const { return cutoff_; }
    Colour colours() const { return colours_; }
    const std::map<Multidegree, Rational> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add(const Multidegree &m, const Rational &c);

    TruncatedQSym &operator+=(const TruncatedQSym &o);
    friend TruncatedQSym operator*(const TruncatedQSym &a, const TruncatedQSym &b);
    friend bool operator==(const TruncatedQSym &a, const TruncatedQSym &b) { return a.terms_ == b.terms_; }

private:
    std::uint32_t cutoff_;
    Colour colours_;
    std::map<Multidegree, Rational> terms_;
};

// F_a restricted to x_i^{(j)} with i <= cutoff, j < colours.
// Throws ColourOutOfRange, BadParameters (cutoff 0).
TruncatedQSym expand_F(const ColouredPermutation &a, std::uint32_t cutoff, Colour colours);
// Colours inferred as max colour + 1.
TruncatedQSym expand_F(const ColouredPermutation &a, std::uint32_t cutoff);

// F_a F_b == sum over shuffles c of F_c, compared monomial by monomial.
// Throws SymbolOverlap.
bool verify_product_rule(const ColouredPermutation &a, const ColouredPermutation &b, std::uint32_t cutoff);

// The specialisation x_i^{(0)} <- x^{i-1} p_0 (i <= m), x_i^{(j)} <- x^{i-1} p_j
// (1 < i <= m, j >= 1), every other variable <- 0. Requires F.cutoff() >= m.
PxPoly psi_m(const TruncatedQSym &F, std::uint32_t m);

// sum_{m=1}^{t_order+1} psi_m(F_a) t^{m-1}
SeriesT psi_series(const ColouredPermutation &a, std::size_t t_order);

// Compares psi_series(a) with the expansion of
// p^col x^comaj t^des / ((1-t)(1-xt)...(1-x^n t)) through t^t_order.
bool psi_closed_form_check(const ColouredPermutation &a, std::size_t t_order);

} // namespace colhad
