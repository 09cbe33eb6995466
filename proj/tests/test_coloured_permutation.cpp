#include <doctest.h>

#include <random>
#include <set>

#include "colhad/coloured_permutation.hpp"
#include "colhad/error.hpp"
#include "colhad/shuffle_algebra.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace colhad;
using testing_helpers::P;

TEST_CASE("colour order")
{
    CHECK(ColouredInteger{1, 1} < ColouredInteger{2, 0});
    CHECK(ColouredInteger{1, 0} < ColouredInteger{2, 0});
    CHECK(ColouredInteger{3, 5} == ColouredInteger{3, 5});
    CHECK(compare({3, 5}, {3, 5}) == std::strong_ordering::equal);
    CHECK(ColouredInteger{2, 1} < ColouredInteger{1, 0});
    CHECK(ColouredInteger{9, 2} < ColouredInteger{1, 1});
    CHECK(compare({1, 0}, {1, 1}) == std::strong_ordering::greater);
}

TEST_CASE("colour order is a total order matching the oracle")
{
    std::vector<ColouredInteger> xs;
    for (Symbol s = 1; s <= 4; ++s) {
        for (Colour c = 0; c < 4; ++c) {
            xs.push_back({s, c});
        }
    }
    for (const auto &a : xs) {
        for (const auto &b : xs) {
            CHECK((a < b) == oracle::colour_less(a, b));
        }
    }
}

TEST_CASE("construction validates symbols")
{
    CHECK_THROWS_AS(ColouredPermutation({{1, 0}, {1, 2}}), InvalidPermutation);
    CHECK_THROWS_AS(ColouredPermutation({{0, 0}}), InvalidPermutation);
    CHECK_NOTHROW(ColouredPermutation({{5, 0}, {2, 7}}));
    CHECK(ColouredPermutation().empty());
    CHECK(ColouredPermutation::uncoloured({2, 1, 3}) == P("2 1 3"));
}

TEST_CASE("descent sets")
{
    CHECK(descent_set(P("1^1 2^0")) == std::vector<std::uint32_t>{0});
    CHECK(descent_set(P("1^0 2^0")).empty());
    CHECK(descent_set(P("2^0 1^0 3^0")) == std::vector<std::uint32_t>{1});
    CHECK(descent_set(P("")).empty());
    CHECK(descent_set(P("1^1 2^2")) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("statistics of the eight shuffles")
{
    // des and comaj of each summand of (1^0 + 1^1) shuffled with (2^0 + 2^2)
    const std::vector<std::tuple<std::string, unsigned, unsigned>> table{
        {"1^0 2^0", 0, 0}, {"2^0 1^0", 1, 1}, {"1^0 2^2", 1, 1}, {"2^2 1^0", 1, 2},
        {"1^1 2^0", 1, 2}, {"2^0 1^1", 1, 1}, {"1^1 2^2", 2, 3}, {"2^2 1^1", 1, 2},
    };
    for (const auto &[text, d, c] : table) {
        const auto st = stat_triple(P(text));
        CHECK_MESSAGE(st.des == d, text);
        CHECK_MESSAGE(st.comaj == c, text);
    }
}

TEST_CASE("stat_triple")
{
    auto st = stat_triple(P("1^1 2^2"));
    CHECK(st.des == 2);
    CHECK(st.comaj == 3);
    CHECK(st.col == std::map<Colour, std::uint32_t>{{1, 1}, {2, 1}});
    st = stat_triple(P("2^2 1^1"));
    CHECK(st.des == 1);
    CHECK(st.comaj == 2);
    st = stat_triple(P(""));
    CHECK(st.des == 0);
    CHECK(st.comaj == 0);
    CHECK(st.col.empty());
    st = stat_triple(P("2 1 3"));
    CHECK(st.des == 1);
    CHECK(st.comaj == 2);
}

TEST_CASE("stat_triple agrees with the oracle on random input")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
        const auto a = testing_helpers::random_permutation(rng, n, 4, 9);
        const auto st = stat_triple(a);
        CHECK(st.des == oracle::des(a));
        CHECK(static_cast<long>(st.comaj) == oracle::comaj(a));
        std::uint32_t total = 0;
        for (const auto &[c, k] : st.col) {
            CHECK(k > 0);
            total += k;
        }
        CHECK(total == a.size());
    }
}

TEST_CASE("coloured descent set")
{
    CHECK(s_des(P("1^0 2^0")).elements == std::map<std::uint32_t, Colour>{{2, 0}});
    CHECK(s_des(P("1^1 2^0")).elements == std::map<std::uint32_t, Colour>{{1, 1}, {2, 0}});
    CHECK(s_des(P("")).elements.empty());
    CHECK(s_des(P("3^2 1^2 2^0")).len() == 3);
}

TEST_CASE("sDes determines the colour word and Des")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
        const auto a = testing_helpers::random_permutation(rng, n, 3, 8);
        const auto s = s_des(a);
        CHECK(colour_word(s) == a.colour_word());
        CHECK(descent_set(s) == descent_set(a));
        CHECK(s.len() == a.size());
    }
}

TEST_CASE("shuffles")
{
    CHECK(shuffles(P("1^0"), P("2^2")) == std::vector<ColouredPermutation>{P("1^0 2^2"), P("2^2 1^0")});
    CHECK(shuffles(P("1 2"), P("3 4")).size() == 6);
    CHECK(shuffles(P("1^1 3"), P("")) == std::vector<ColouredPermutation>{P("1^1 3")});
    CHECK(shuffles(P(""), P("")) == std::vector<ColouredPermutation>{P("")});
    CHECK_THROWS_AS(shuffles(P("1 2"), P("2")), SymbolOverlap);
}

TEST_CASE("shuffles match the interleaving oracle and are distinct")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto la = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        const auto lb = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        const auto ab = testing_helpers::random_permutation(rng, la + lb, 3, 9);
        const ColouredPermutation a(std::vector<ColouredInteger>(ab.begin(), ab.begin() + la));
        const ColouredPermutation b(std::vector<ColouredInteger>(ab.begin() + la, ab.end()));
        const auto s = shuffles(a, b);
        CHECK(s.size() == binomial(la + lb, la));
        auto expected = oracle::interleavings(a, b);
        auto got = s;
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
        CHECK(std::set<ColouredPermutation>(s.begin(), s.end()).size() == s.size());
    }
}

TEST_CASE("canonical statistics class")
{
    const auto key = canonical_statistics_class(P("1^1 2^2"));
    CHECK(key.length == 2);
    CHECK(key.stats.des == 2);
    CHECK(key.stats.comaj == 3);
    CHECK(canonical_statistics_class(P("2^0 1^1")) == canonical_statistics_class(P("3^0 1^1")));
    CHECK(canonical_statistics_class(P("1^0 2^0")) != canonical_statistics_class(P("2^0 1^0")));
}

TEST_CASE("standardize and binomial")
{
    CHECK(standardize(P("7^2 3 5^1")) == P("3^2 1 2^1"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("palette and printing")
{
    const auto a = P("2^0 1^3 4^1");
    CHECK(a.palette() == std::set<Colour>{0, 1, 3});
    CHECK(a.palette_star() == std::set<Colour>{1, 3});
    CHECK(a.symbols() == std::set<Symbol>{1, 2, 4});
    CHECK(a.to_string() == "2^0 1^3 4^1");
    CHECK(P("").to_string().empty());
}

TEST_CASE("permutation order is by length then entries")
{
    CHECK(P("") < P("1"));
    CHECK(P("5") < P("1 2"));
    CHECK(P("1^1") < P("1^0"));
}
