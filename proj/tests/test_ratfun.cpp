#include <doctest.h>

#include <random>

#include "colhad/error.hpp"
#include "colhad/ratfun.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace colhad;
using testing_helpers::LC;
using testing_helpers::M;
using testing_helpers::X;

namespace {

RationalGF example_w(std::int64_t eps, const LaurentPoly &a1)
{
    // (1 + a1 X^eps Y) / ((1 - Y)(1 - X^eps Y))
    RationalGF::Denominator den;
    ++den[M(0)];
    ++den[M(eps)];
    return RationalGF(YPolynomial(LaurentPoly(1)) + YPolynomial::term(1, a1 * X(eps)), den);
}

} // namespace

TEST_CASE("expand: geometric series and long division")
{
    const RationalGF geometric(YPolynomial(LaurentPoly(1)), {{M(0), 1}});
    const auto s = expand(geometric, 3);
    CHECK(s.order() == 3);
    for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(s[k] == LaurentPoly(1));
    }

    const auto r = RationalGF::from_factors(LaurentPoly(1), {M(-1)}, {M(0), M(1)});
    const auto t = expand(r, 1);
    CHECK(t[0] == LaurentPoly(1));
    CHECK(t[1] == LaurentPoly(1) + X(1) - X(-1));
}

TEST_CASE("expand agrees with the long-division oracle")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> e(-3, 3), c(-2, 2), deg(0, 3), nf(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        YPolynomial num;
        for (int k = 0; k <= deg(rng); ++k) {
            num.add_term(static_cast<std::size_t>(k), X(e(rng), c(rng)));
        }
        RationalGF::Denominator den;
        for (int k = 0; k < nf(rng); ++k) {
            const int coeff = c(rng);
            ++den[Monomial(Rational(coeff == 0 ? 1 : coeff), e(rng))];
        }
        const RationalGF r(num, den);
        CHECK(expand(r, 9) == oracle::divide(r, 9));
    }
}

TEST_CASE("hadamard_series")
{
    const SeriesY ones(std::vector<LaurentPoly>{1, 1, 1});
    CHECK(hadamard_series(ones, ones) == ones);
    const SeriesY a(std::vector<LaurentPoly>{1, X(1), X(2)});
    const SeriesY b(std::vector<LaurentPoly>{1, 2, 3});
    CHECK(hadamard_series(a, b) == SeriesY(std::vector<LaurentPoly>{1, X(1, 2), X(2, 3)}));
    CHECK_THROWS_AS(hadamard_series(a, SeriesY(4)), OrderMismatch);
    CHECK_THROWS_AS(a + SeriesY(1), OrderMismatch);
    CHECK_THROWS_AS(a * SeriesY(1), OrderMismatch);
}

TEST_CASE("series product and scaling")
{
    const SeriesY a(std::vector<LaurentPoly>{1, X(1)});
    const SeriesY sq = a * a;
    CHECK(sq[1] == X(1, 2));
    const auto scaled = a.scale_y(M(2, -1));
    CHECK(scaled[1] == X(3, -1));
    CHECK(a.truncate(0).order() == 0);
}

TEST_CASE("w_of for the one-symbol configuration")
{
    for (std::int64_t eps : {-2, -1, 0, 1, 2}) {
        for (std::int64_t k : {-2, 0, 3}) {
            for (int sign : {-1, 1}) {
                const auto lc =
                    LabelledConfiguration(ColouredConfiguration{testing_helpers::P("1^0"), testing_helpers::P("1^1")},
                                          Label{{1, {sign, k}}});
                CHECK(equal(w_of(lc, eps), example_w(eps, X(k, sign))));
            }
        }
    }
}

TEST_CASE("w_of: degenerate configurations")
{
    CHECK(w_of(LabelledConfiguration{}, 1).is_zero());
    const auto unit = LabelledConfiguration(ColouredConfiguration::unit(), Label{});
    CHECK(equal(w_of(unit, 3), RationalGF(YPolynomial(LaurentPoly(1)), {{M(0), 1}})));
}

TEST_CASE("w_of of the eight shuffles at a sample label")
{
    const auto lc = LC("1^0 2^0\n2^0 1^0\n1^0 2^2\n2^2 1^0\n1^1 2^0\n2^0 1^1\n1^1 2^2\n2^2 1^1\n"
                       "1 -> -X^-1\n2 -> -X^-2\n");
    const auto w = w_of(lc, 1);
    // 1 + (1 - X^-1 - X^-2) X Y + (-X^-1 - X^-2 + X^-3) X^2 Y + X^-3 X^3 Y^2
    YPolynomial num(LaurentPoly(1));
    num += YPolynomial::term(1, (LaurentPoly(1) - X(-1) - X(-2)) * X(1));
    num += YPolynomial::term(1, (-X(-1) - X(-2) + X(-3)) * X(2));
    num += YPolynomial::term(2, X(-3) * X(3));
    const RationalGF expected(num, {{M(0), 1}, {M(1), 1}, {M(2), 1}});
    CHECK(equal(w, expected));
    CHECK(w.numerator() == num);
}

TEST_CASE("w_of matches the definition term by term")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto lhs = testing_helpers::random_labelled(rng, 4, 4, 3, 5);
        for (std::int64_t eps = -2; eps <= 2; ++eps) {
            CHECK(expand(w_of(lhs, eps), 8) == oracle::w_series(lhs, eps, 8));
        }
        CHECK(equal(w_of(canonicalize(lhs), 1), w_of(lhs, 1)));
    }
}

TEST_CASE("equal cancels common factors")
{
    const auto a = RationalGF::from_factors(LaurentPoly(1), {M(-1)}, {M(0), M(-1)});
    const RationalGF b(YPolynomial(LaurentPoly(1)), {{M(0), 1}});
    CHECK(equal(a, b));
    CHECK_FALSE(a == b);
    const auto ex22 = example_w(1, X(-1, -1));
    const auto ex23 = w_of(LC("1^0 2^0\n2^0 1^0\n"), 1);
    CHECK_FALSE(equal(ex22, ex23));
    CHECK(equal(RationalGF(), RationalGF(YPolynomial(), {{M(3), 2}})));
}

TEST_CASE("addition and multiplication of rational functions")
{
    const auto a = RationalGF::from_factors(LaurentPoly(1), {}, {M(0)});
    const auto b = RationalGF::from_factors(LaurentPoly(1), {}, {M(1)});
    const auto sum = a + b;
    CHECK(expand(sum, 4) == expand(a, 4) + expand(b, 4));
    const auto prod = a * b;
    CHECK(expand(prod, 4) == expand(a, 4) * expand(b, 4));
    CHECK(equal(a + RationalGF(), a));
}

TEST_CASE("substitution")
{
    // mat(2,1) at q = 3
    const auto w = RationalGF::from_factors(LaurentPoly(1), {M(-1)}, {M(0), M(1)});
    const auto z = substitute(w, Rational(3), M(0));
    const RationalGF expected(YPolynomial(LaurentPoly(1)) - YPolynomial::term(1, LaurentPoly(Rational(1, 3))),
                              {{Monomial(Rational(1), 0), 1}, {Monomial(Rational(3), 0), 1}});
    CHECK(equal(z, expected));
    CHECK(equal(w.scale_y(M(0)), w));
    CHECK_THROWS_AS(w.substitute_x(Rational(0)), ZeroSubstitution);
    const auto half = w.substitute_x(Rational(1, 2));
    CHECK(expand(half, 3)[2] == expand(w, 3)[2].evaluate(Rational(1, 2)));
}

TEST_CASE("staircase denominator")
{
    const auto den = staircase_denominator(0, 3);
    CHECK(den.size() == 1);
    CHECK(den.at(M(0)) == 4);
    CHECK(staircase_denominator(2, 2).size() == 3);
}

TEST_CASE("scaling Y in a rational function matches the series")
{
    const auto w = RationalGF::from_factors(X(1), {M(-1), M(2, 3)}, {M(0), M(1), M(2)});
    const auto m = Monomial(Rational(-2, 3), 5);
    CHECK(expand(w.scale_y(m), 7) == expand(w, 7).scale_y(m));
}
