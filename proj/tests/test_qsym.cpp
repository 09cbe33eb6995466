#include <doctest.h>

#include <set>

#include "colhad/error.hpp"
#include "colhad/qsym.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace colhad;
using testing_helpers::P;
using testing_helpers::X;

namespace {

// Library expansion in the oracle's representation.
oracle::QPoly as_oracle(const TruncatedQSym &f)
{
    oracle::QPoly out;
    for (const auto &[deg, c] : f.terms()) {
        oracle::QMonomial m;
        for (const auto &[v, e] : deg) {
            m[{v.index, v.colour}] = e;
        }
        REQUIRE(c.get_den() == 1);
        out[m] = c.get_num().get_si();
    }
    return out;
}

} // namespace

TEST_CASE("F of small permutations")
{
    const auto one = expand_F(P(""), 3, 2);
    CHECK(one.size() == 1);
    CHECK(one.terms().begin()->first.empty());

    // x1x1 + x1x2 + x2x2
    const auto f = expand_F(P("1 2"), 2, 1);
    CHECK(f.size() == 3);
    const QVariable x1{1, 0}, x2{2, 0};
    CHECK(f.terms().count(Multidegree{{x1, 2}}) == 1);
    CHECK(f.terms().count(Multidegree{{x1, 1}, {x2, 1}}) == 1);
    CHECK(f.terms().count(Multidegree{{x2, 2}}) == 1);

    // descent at 1: only x1 x2
    CHECK(expand_F(P("2 1"), 2, 1).size() == 1);
}

TEST_CASE("F errors")
{
    CHECK_THROWS_AS(expand_F(P("1^3"), 2, 3), ColourOutOfRange);
    CHECK_THROWS_AS(expand_F(P("1"), 0, 1), BadParameters);
    CHECK_NOTHROW(expand_F(P("1^2 2"), 3));
}

TEST_CASE("F agrees with the brute-force enumeration")
{
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto &a : all_coloured_permutations(n, 3)) {
            for (unsigned m : {1u, 2u, 4u}) {
                CHECK(as_oracle(expand_F(a, m, 3)) == oracle::fundamental(a, m));
            }
        }
    }
}

TEST_CASE("F depends only on sDes")
{
    CHECK(expand_F(P("1^1 3 2"), 4, 2) == expand_F(P("2^1 3 1"), 4, 2));
    CHECK(s_des(P("1^1 3 2")) == s_des(P("2^1 3 1")));
}

TEST_CASE("product rule")
{
    CHECK(verify_product_rule(P("1"), P("2^2"), 3));
    CHECK(verify_product_rule(P(""), P("2^2 1"), 3));
    CHECK(verify_product_rule(P("1^1 3"), P(""), 3));
    CHECK(verify_product_rule(P("3^1 1"), P("2^2 4"), 4));
    CHECK_THROWS_AS(verify_product_rule(P("1"), P("1"), 3), SymbolOverlap);
}

TEST_CASE("product rule against the oracle product")
{
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"1^1", "2^2"}, {"2 1^1", "3^2"}, {"1^2 3", "2 4^1"}, {"3^1 1^1", "2"}};
    for (const auto &[ta, tb] : pairs) {
        const auto a = P(ta);
        const auto b = P(tb);
        oracle::QPoly rhs;
        for (const auto &c : oracle::interleavings(a, b)) {
            for (const auto &[m, k] : oracle::fundamental(c, 4)) {
                rhs[m] += k;
            }
        }
        CHECK(oracle::multiply(oracle::fundamental(a, 4), oracle::fundamental(b, 4)) == rhs);
        CHECK(verify_product_rule(a, b, 4));
    }
}

TEST_CASE("truncated products")
{
    const auto a = expand_F(P("1"), 2, 1);
    const auto sq = a * a;
    // (x1 + x2)^2
    CHECK(sq.size() == 3);
    CHECK(sq.terms().at(Multidegree{{QVariable{1, 0}, 1}, {QVariable{2, 0}, 1}}) == 2);
    TruncatedQSym acc(2, 1);
    acc += a;
    acc += a;
    CHECK(acc.terms().at(Multidegree{{QVariable{1, 0}, 1}}) == 2);
    CHECK(multiply(Multidegree{{QVariable{1, 0}, 1}}, Multidegree{{QVariable{1, 0}, 2}, {QVariable{2, 1}, 1}}) ==
          Multidegree{{QVariable{1, 0}, 3}, {QVariable{2, 1}, 1}});
}

TEST_CASE("psi_m")
{
    CHECK(psi_m(expand_F(P("1^1"), 1, 2), 1).empty());
    const auto unit = psi_m(expand_F(P(""), 3, 1), 3);
    REQUIRE(unit.size() == 1);
    CHECK(unit.begin()->second == LaurentPoly(1));
    CHECK_THROWS_AS(psi_m(expand_F(P("1"), 2, 1), 3), BadParameters);
    // psi_2(F_1) = p0 (1 + x)
    const auto p = psi_m(expand_F(P("1"), 2, 1), 2);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->second == LaurentPoly(1) + X(1));
}

TEST_CASE("psi series against the index-sum oracle")
{
    for (std::size_t n = 0; n <= 3; ++n) {
        std::set<StatKey> seen;
        for (const auto &a : all_coloured_permutations(n, 3)) {
            if (!seen.insert(canonical_statistics_class(a)).second) {
                continue;
            }
            const auto s = psi_series(a, 6);
            const PzMonomial pz{stat_triple(a).col, 0};
            for (std::size_t k = 0; k <= 6; ++k) {
                const auto expected = oracle::psi_index_sum(a, static_cast<unsigned>(k + 1));
                if (expected.is_zero()) {
                    CHECK(s[k].empty());
                } else {
                    REQUIRE(s[k].size() == 1);
                    CHECK(s[k].begin()->first == pz);
                    CHECK(s[k].begin()->second == expected);
                }
            }
            CHECK(psi_closed_form_check(a, 6));
        }
    }
}

TEST_CASE("psi closed form in small cases")
{
    CHECK(psi_closed_form_check(P("1"), 5));
    CHECK(psi_closed_form_check(P(""), 4));
    CHECK(psi_closed_form_check(P("2^1 1^2 3"), 5));
}
