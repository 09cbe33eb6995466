#include <doctest.h>

#include "colhad/configuration.hpp"
#include "colhad/error.hpp"
#include "helpers.hpp"

using namespace colhad;
using testing_helpers::LC;
using testing_helpers::P;

TEST_CASE("labels")
{
    Label label;
    label.set(1, {-1, -2});
    CHECK(label(1) == SignedMonomial{-1, -2});
    CHECK(label(0).is_one());
    CHECK(label(7).is_one());
    CHECK(label.support() == std::set<Colour>{1});
    CHECK_THROWS_AS(label.set(0, {-1, 0}), InvalidLabel);
    CHECK_THROWS_AS(label.set(2, {3, 0}), InvalidLabel);
    CHECK_NOTHROW(label.set(0, SignedMonomial::one()));
    label.set(1, SignedMonomial::one());
    CHECK(label.support().empty());
}

TEST_CASE("evaluate_label")
{
    const Label alpha{{1, {-1, -4}}};
    CHECK(evaluate_label(alpha, P("1^1 2^0")) == SignedMonomial{-1, -4});
    CHECK(evaluate_label(alpha, P("1 2 3")).is_one());
    CHECK(evaluate_label(alpha, P("")).is_one());
    const Label beta{{1, {-1, -1}}, {2, {-1, -1}}};
    CHECK(evaluate_label(beta, P("1^1 2^2")) == SignedMonomial{1, -2});
}

TEST_CASE("label support must lie in the palette")
{
    ColouredConfiguration f{P("1^0"), P("1^1")};
    CHECK_NOTHROW(LabelledConfiguration(f, Label{{1, {-1, 1}}}));
    CHECK_THROWS_AS(LabelledConfiguration(f, Label{{2, {-1, 1}}}), InvalidLabel);
}

TEST_CASE("configuration multiplicities")
{
    ColouredConfiguration f;
    CHECK(f.empty());
    f.add(P("1 2"));
    f.add(P("1 2"), 2);
    f.add(P("2^1"));
    CHECK(f.multiplicity(P("1 2")) == 3);
    CHECK(f.multiplicity(P("2 1")) == 0);
    CHECK(f.total_multiplicity() == 4);
    CHECK(f.support_size() == 2);
    CHECK(f.max_length() == 2);
    CHECK(f.symbols() == std::set<Symbol>{1, 2});
    CHECK(f.palette_star() == std::set<Colour>{1});
    CHECK(ColouredConfiguration::unit().multiplicity(P("")) == 1);
}

TEST_CASE("configuration shuffle")
{
    const ColouredConfiguration f{P("1^0"), P("1^1")};
    const ColouredConfiguration g{P("2^0"), P("2^2")};
    const ColouredConfiguration expected{P("1^0 2^0"), P("2^0 1^0"), P("1^0 2^2"), P("2^2 1^0"),
                                         P("1^1 2^0"), P("2^0 1^1"), P("1^1 2^2"), P("2^2 1^1")};
    CHECK(config_shuffle(f, g) == expected);
    CHECK(config_shuffle(f, ColouredConfiguration::unit()) == f);
    CHECK(config_shuffle(f, ColouredConfiguration{}).empty());
    CHECK_THROWS_AS(config_shuffle(f, f), SymbolOverlap);

    ColouredConfiguration h;
    h.add(P("3"), 2);
    CHECK(config_shuffle(f, h).total_multiplicity() == 2 * 2 * 2);
}

TEST_CASE("disjointness")
{
    const ColouredConfiguration f{P("1^0"), P("1^1")};
    const ColouredConfiguration g{P("2^0"), P("2^2")};
    const ColouredConfiguration h{P("2^1")};
    CHECK(are_disjoint(f, g));
    CHECK(are_strongly_disjoint(f, g));
    CHECK(are_disjoint(f, h));
    CHECK_FALSE(are_strongly_disjoint(f, h));
    CHECK_FALSE(are_disjoint(f, f));
}

TEST_CASE("canonicalize")
{
    const auto lc = LabelledConfiguration(ColouredConfiguration{P("5^0 7^9")}, Label{{9, {-1, 2}}});
    const auto canon = canonicalize(lc);
    CHECK(canon.config() == ColouredConfiguration{P("1^0 2^1")});
    CHECK(canon.label() == Label{{1, {-1, 2}}});
    CHECK(canonicalize(canon) == canon);
}

TEST_CASE("relabel")
{
    const auto lc = LabelledConfiguration(ColouredConfiguration{P("1^2 2")}, Label{{2, {1, 3}}});
    const auto r = relabel(lc, {{1, 4}, {2, 9}}, {{2, 5}});
    CHECK(r.config() == ColouredConfiguration{P("4^5 9")});
    CHECK(r.label() == Label{{5, {1, 3}}});
}

TEST_CASE("make_strongly_disjoint")
{
    const auto lhs = LabelledConfiguration(ColouredConfiguration{P("1^1")}, Label{});
    const auto rhs = LabelledConfiguration(ColouredConfiguration{P("1^0"), P("1^1")}, Label{{1, {-1, 1}}});
    const auto moved = make_strongly_disjoint(lhs, rhs);
    CHECK(moved.config() == ColouredConfiguration{P("2^0"), P("2^2")});
    CHECK(moved.label() == Label{{2, {-1, 1}}});
    CHECK(are_strongly_disjoint(lhs.config(), moved.config()));
    CHECK(canonicalize(moved) == canonicalize(rhs));

    const auto far = LabelledConfiguration(ColouredConfiguration{P("5^3")}, Label{});
    CHECK(make_strongly_disjoint(lhs, far) == far);
}

TEST_CASE("coherence and merged labels")
{
    const auto f = LabelledConfiguration(ColouredConfiguration{P("1^0"), P("1^1")}, Label{{1, {-1, -1}}});
    const auto g = LabelledConfiguration(ColouredConfiguration{P("2^0"), P("2^2")}, Label{{2, {-1, -2}}});
    CHECK(check_coherence(f, g));
    CHECK(merge_labels(f, g) == Label{{1, {-1, -1}}, {2, {-1, -2}}});

    const auto g_same = LabelledConfiguration(ColouredConfiguration{P("2^1")}, Label{{1, {-1, -1}}});
    CHECK(check_coherence(f, g_same));
    CHECK(merge_labels(f, g_same) == Label{{1, {-1, -1}}});

    const auto g_clash = LabelledConfiguration(ColouredConfiguration{P("2^1")}, Label{{1, {1, -1}}});
    CHECK_FALSE(check_coherence(f, g_clash));
    CHECK_THROWS_AS(merge_labels(f, g_clash), NotCoherent);

    // alpha trivial on a colour beta uses: still a clash
    const auto f_plain = LabelledConfiguration(ColouredConfiguration{P("1^1")}, Label{});
    CHECK_FALSE(check_coherence(f_plain, g_clash));

    const auto overlap = LabelledConfiguration(ColouredConfiguration{P("1^2")}, Label{});
    CHECK_FALSE(check_coherence(f, overlap));

    const auto empty = LabelledConfiguration{};
    CHECK(merge_labels(empty, empty) == Label{});
}
