#include "colhad/zeta_catalog.hpp"

#include <algorithm>
#include <numeric>

#include "colhad/error.hpp"

namespace colhad {

namespace {

struct FamilyInfo {
    Family family;
    const char *name;
    std::size_t arity;
};

constexpr FamilyInfo family_table[] = {
    {Family::mat, "mat", 2},
    {Family::so, "so", 1},
    {Family::f2d_cc, "f2d_cc", 1},
    {Family::threshold, "threshold", 1},
    {Family::threshold_cc, "threshold_cc", 1},
    {Family::tn, "Tn", 1},
    {Family::tn_cc, "Tn_cc", 1},
    {Family::unitriangular_oc, "unitriangular_oc", 1},
};

const FamilyInfo &info(Family f)
{
    for (const auto &i : family_table) {
        if (i.family == f) {
            return i;
        }
    }
    throw UnknownFamily("unknown family");
}

std::int64_t binom2(std::int64_t n)
{
    return n * (n - 1) / 2;
}

Monomial xm(std::int64_t k)
{
    return {Rational(1), k};
}

SignedMonomial neg_x(std::int64_t k)
{
    return {-1, k};
}

// Edges of Delta_n v K_{n+1}.
std::int64_t threshold_edges(std::int64_t n)
{
    return 3 * binom2(n + 1);
}

// Edges of T_n = ((Delta_n v K_{n+1}) + Delta_{n+2}) v K_{n+4}.
std::int64_t tn_edges(std::int64_t n)
{
    return binom2(n + 4) + 3 * binom2(n + 1) + (n + 4) * (3 * n + 3);
}

RationalGF threshold_ask(std::int64_t n)
{
    return RationalGF::from_factors(1, {xm(-n), xm(-n - 1)}, {xm(-1), xm(0), xm(1)});
}

RationalGF tn_ask(std::int64_t n)
{
    return RationalGF::from_factors(1, {xm(-n - 4), xm(-n - 3), xm(-n - 3), xm(-n - 2)},
                                    {xm(-3), xm(-2), xm(-1), xm(0), xm(1)});
}

LabelledConfiguration labelled(ColouredConfiguration f, const std::vector<std::pair<Colour, SignedMonomial>> &values)
{
    Label alpha;
    for (const auto &[c, v] : values) {
        alpha.set(c, v);
    }
    return {std::move(f), std::move(alpha)};
}

} // namespace

std::string family_name(Family f)
{
    return info(f).name;
}

Family parse_family(const std::string &name)
{
    for (const auto &i : family_table) {
        if (name == i.name) {
            return i.family;
        }
    }
    throw UnknownFamily("unknown family '" + name + "'");
}

std::vector<Family> all_families()
{
    std::vector<Family> out;
    for (const auto &i : family_table) {
        out.push_back(i.family);
    }
    return out;
}

std::size_t family_arity(Family f)
{
    return info(f).arity;
}

ColouredConfiguration underline(Symbol first, Symbol last)
{
    ColouredConfiguration f;
    if (last < first) {
        f.add(ColouredPermutation{});
        return f;
    }
    const std::size_t k = last - first + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<ColouredInteger> entries;
        for (std::size_t i = 0; i < k; ++i) {
            const Symbol s = first + static_cast<Symbol>(i);
            entries.push_back({s, (mask >> i) & 1U ? s : Colour{0}});
        }
        f.add(ColouredPermutation(std::move(entries)));
    }
    return f;
}

ColouredConfiguration pi_of(const std::vector<ColouredPermutation> &perms)
{
    ColouredConfiguration f;
    for (const auto &sigma : perms) {
        const std::size_t n = sigma.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<ColouredInteger> entries;
            for (std::size_t i = 0; i < n; ++i) {
                entries.push_back({sigma[i].symbol, (mask >> i) & 1U ? sigma[i].symbol : Colour{0}});
            }
            f.add(ColouredPermutation::unchecked(std::move(entries)));
        }
    }
    return f;
}

std::vector<ColouredPermutation> symmetric_group(std::size_t n)
{
    std::vector<Symbol> perm(n);
    std::iota(perm.begin(), perm.end(), Symbol{1});
    std::vector<ColouredPermutation> out;
    do {
        out.push_back(ColouredPermutation::uncoloured(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ZetaEntry build_entry(Family family, const std::vector<std::int64_t> &params)
{
    if (params.size() != family_arity(family)) {
        throw BadParameters(family_name(family) + " takes " + std::to_string(family_arity(family)) +
                            " parameter(s)");
    }
    for (auto p : params) {
        if (p < 1) {
            throw BadParameters("parameters must be positive");
        }
        if (p > 64) {
            throw BadParameters("parameter too large");
        }
    }
    ZetaEntry e;
    e.family = family;
    e.params = params;
    const std::int64_t p0 = params[0];
    switch (family) {
    case Family::mat: {
        const std::int64_t d = params[0];
        const std::int64_t ee = params[1];
        e.zeta_name = "Z^ask_{Mat_{" + std::to_string(d) + "x" + std::to_string(ee) + "}}";
        e.config = labelled(underline(1, 1), {{1, neg_x(-d)}});
        e.eps = d - ee;
        e.table_form = RationalGF::from_factors(1, {xm(-ee)}, {xm(0), xm(d - ee)});
        e.closed_form = e.table_form;
        break;
    }
    case Family::so:
    case Family::f2d_cc: {
        const std::int64_t d = p0;
        e.config = labelled(underline(1, 1), {{1, neg_x(-d)}});
        e.eps = 1;
        e.table_form = RationalGF::from_factors(1, {xm(1 - d)}, {xm(0), xm(1)});
        if (family == Family::so) {
            e.zeta_name = "Z^ask_{so_" + std::to_string(d) + "}";
            e.closed_form = e.table_form;
            e.conditions = {"char(O) != 2"};
        } else {
            e.zeta_name = "Z^cc_{F_{2," + std::to_string(d) + "}}";
            e.shift = {1, binom2(d)};
            e.closed_form =
                RationalGF::from_factors(1, {xm(binom2(d - 1))}, {xm(binom2(d)), xm(binom2(d) + 1)});
            e.conditions = {"q odd"};
        }
        break;
    }
    case Family::threshold:
    case Family::threshold_cc: {
        const std::int64_t n = p0;
        e.config = labelled(underline(1, 2), {{1, neg_x(-n - 1)}, {2, neg_x(-n - 1)}});
        e.eps = 1;
        e.table_form = RationalGF::from_factors(1, {xm(1 - n), xm(-n)}, {xm(0), xm(1), xm(2)});
        if (family == Family::threshold) {
            e.zeta_name = "Z^ask_{Delta_" + std::to_string(n) + " v K_" + std::to_string(n + 1) + "}";
            e.shift = {1, -1};
            e.closed_form = threshold_ask(n);
        } else {
            e.zeta_name = "Z^cc_{G_{Delta_" + std::to_string(n) + " v K_" + std::to_string(n + 1) + "}}";
            e.shift = {1, threshold_edges(n) - 1};
            e.closed_form = threshold_ask(n).scale_y(xm(threshold_edges(n)));
        }
        break;
    }
    case Family::tn:
    case Family::tn_cc: {
        const std::int64_t n = p0;
        e.config = labelled(underline(1, 4), {{1, neg_x(-n - 3)}, {2, neg_x(-n - 3)}, {3, neg_x(-n - 2)},
                                              {4, neg_x(-n - 2)}});
        e.eps = 1;
        e.table_form = RationalGF::from_factors(1, {xm(-n - 1), xm(-n), xm(-n), xm(1 - n)},
                                                {xm(0), xm(1), xm(2), xm(3), xm(4)});
        if (family == Family::tn) {
            e.zeta_name = "Z^ask_{T_" + std::to_string(n) + "}";
            e.shift = {1, -3};
            e.closed_form = tn_ask(n);
        } else {
            e.zeta_name = "Z^cc_{G_{T_" + std::to_string(n) + "}}";
            e.shift = {1, tn_edges(n) - 3};
            e.closed_form = tn_ask(n).scale_y(xm(tn_edges(n)));
        }
        break;
    }
    case Family::unitriangular_oc: {
        const std::int64_t d = p0;
        e.zeta_name = "Z^oc_{U_" + std::to_string(d + 1) + "}";
        std::vector<std::pair<Colour, SignedMonomial>> values;
        for (std::int64_t j = 1; j <= d; ++j) {
            values.emplace_back(static_cast<Colour>(j), neg_x(-1));
        }
        e.config = labelled(underline(1, static_cast<Symbol>(d)), values);
        e.eps = 0;
        e.shift = {1, 1};
        e.table_form = RationalGF::from_factors(1, std::vector<Monomial>(static_cast<std::size_t>(d), xm(-1)),
                                                std::vector<Monomial>(static_cast<std::size_t>(d + 1), xm(0)));
        e.closed_form = RationalGF::from_factors(1, std::vector<Monomial>(static_cast<std::size_t>(d), xm(0)),
                                                 std::vector<Monomial>(static_cast<std::size_t>(d + 1), xm(1)));
        e.conditions = {"gcd(q, " + std::to_string(d) + "!) = 1"};
        break;
    }
    }
    const auto w = w_of(e.config, e.eps);
    if (!equal(w, e.table_form)) {
        throw Error("catalog identity W = table form failed for " + e.zeta_name);
    }
    if (!equal(w.scale_y(e.shift.as_monomial()), e.closed_form)) {
        throw Error("catalog identity W(X, u(X)Y) = Z failed for " + e.zeta_name);
    }
    return e;
}

namespace {

Label uniform_label(const std::vector<std::int64_t> &exponents)
{
    Label alpha;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        alpha.set(static_cast<Colour>(i + 1), neg_x(-exponents[i]));
    }
    return alpha;
}

ZetaProduct signed_permutation_formula(const std::vector<std::int64_t> &d_list, std::int64_t delta)
{
    const std::size_t n = d_list.size();
    if (n == 0) {
        throw BadParameters("need at least one factor");
    }
    if (n > 7) {
        throw TooLarge("signed permutation sums are enumerated only up to n = 7");
    }
    ZetaProduct out;
    const auto sn = symmetric_group(n);
    out.permutation_count = sn.size();
    out.config = LabelledConfiguration(pi_of(sn), uniform_label(d_list));
    out.eps = delta;
    out.w = w_of(out.config, delta);
    return out;
}

} // namespace

ZetaProduct hadamard_mde(const std::vector<std::pair<std::int64_t, std::int64_t>> &dims)
{
    if (dims.empty()) {
        throw BadParameters("need at least one factor");
    }
    const std::int64_t delta = dims[0].first - dims[0].second;
    std::vector<std::int64_t> d_list;
    for (const auto &[d, e] : dims) {
        if (d < 1 || e < 1) {
            throw BadParameters("matrix dimensions must be positive");
        }
        if (d - e != delta) {
            throw DeltaMismatch("all d_i - e_i must agree");
        }
        d_list.push_back(d);
    }
    return signed_permutation_formula(d_list, delta);
}

ZetaProduct hadamard_f2d(const std::vector<std::int64_t> &d_list)
{
    std::int64_t total = 0;
    for (auto d : d_list) {
        if (d < 1) {
            throw BadParameters("d_i must be positive");
        }
        total += binom2(d);
    }
    auto out = signed_permutation_formula(d_list, 1);
    out.shift = {1, total};
    out.conditions = {"q odd"};
    return out;
}

std::vector<ColouredPermutation> block_shuffle_set(const std::vector<std::int64_t> &d_list)
{
    std::vector<ColouredPermutation> current{ColouredPermutation{}};
    Symbol next = 1;
    for (auto d : d_list) {
        if (d < 0) {
            throw BadParameters("d_i must be nonnegative");
        }
        std::vector<Symbol> block(static_cast<std::size_t>(d));
        std::iota(block.begin(), block.end(), next);
        next += static_cast<Symbol>(d);
        const auto b = ColouredPermutation::uncoloured(block);
        std::vector<ColouredPermutation> grown;
        for (const auto &a : current) {
            for (auto &c : shuffles(a, b)) {
                grown.push_back(std::move(c));
            }
        }
        current = std::move(grown);
    }
    std::sort(current.begin(), current.end());
    return current;
}

ZetaProduct hadamard_ud(const std::vector<std::int64_t> &d_list)
{
    std::int64_t total = 0;
    std::int64_t largest = 0;
    for (auto d : d_list) {
        if (d < 0) {
            throw BadParameters("d_i must be nonnegative");
        }
        total += d;
        largest = std::max(largest, d);
    }
    // |T| * 2^{D_n} terms; check via the multinomial before enumerating.
    if (total > 20) {
        throw TooLarge("block sizes too large");
    }
    std::uint64_t count = 1;
    std::int64_t running = 0;
    for (auto d : d_list) {
        running += d;
        count *= binomial(static_cast<std::uint64_t>(running), static_cast<std::uint64_t>(d));
    }
    if (count * (std::uint64_t{1} << total) > max_formula_terms) {
        throw TooLarge("block shuffle formula exceeds the enumeration limit");
    }
    ZetaProduct out;
    const auto t = block_shuffle_set(d_list);
    out.permutation_count = t.size();
    Label alpha;
    for (std::int64_t j = 1; j <= total; ++j) {
        alpha.set(static_cast<Colour>(j), neg_x(-1));
    }
    out.config = LabelledConfiguration(pi_of(t), std::move(alpha));
    out.eps = 0;
    out.w = w_of(out.config, 0);
    out.shift = {1, static_cast<std::int64_t>(d_list.size())};
    out.conditions = {"gcd(q, (" + std::to_string(largest) + " - 1)!) = 1"};
    return out;
}

} // namespace colhad
