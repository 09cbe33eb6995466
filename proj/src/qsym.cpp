#include "colhad/qsym.hpp"

#include <algorithm>

#include "colhad/error.hpp"

namespace colhad {

Multidegree multiply(const Multidegree &a, const Multidegree &b)
{
    Multidegree r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            r.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            r.push_back(*ib++);
        } else {
            r.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

void TruncatedQSym::add(const Multidegree &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TruncatedQSym &TruncatedQSym::operator+=(const TruncatedQSym &o)
{
    for (const auto &[m, c] : o.terms_) {
        add(m, c);
    }
    return *this;
}

TruncatedQSym operator*(const TruncatedQSym &a, const TruncatedQSym &b)
{
    TruncatedQSym r(std::min(a.cutoff_, b.cutoff_), std::max(a.colours_, b.colours_));
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add(multiply(ma, mb), ca * cb);
        }
    }
    return r;
}

namespace {

Colour inferred_colours(const ColouredPermutation &a)
{
    Colour r = 1;
    for (const auto &e : a) {
        r = std::max(r, e.colour + 1);
    }
    return r;
}

Multidegree monomial_of(const ColouredPermutation &a, const std::vector<std::uint32_t> &indices)
{
    std::map<QVariable, std::uint32_t> exps;
    for (std::size_t j = 0; j < a.size(); ++j) {
        ++exps[{indices[j], a[j].colour}];
    }
    return {exps.begin(), exps.end()};
}

void enumerate_indices(const ColouredPermutation &a, const std::vector<bool> &strict, std::uint32_t cutoff,
                       std::vector<std::uint32_t> &indices, std::size_t pos, TruncatedQSym &out)
{
    if (pos == a.size()) {
        out.add(monomial_of(a, indices), Rational(1));
        return;
    }
    std::uint32_t lo = 1;
    if (pos > 0) {
        lo = indices[pos - 1] + (strict[pos - 1] ? 1 : 0);
    }
    for (std::uint32_t i = lo; i <= cutoff; ++i) {
        indices[pos] = i;
        enumerate_indices(a, strict, cutoff, indices, pos + 1, out);
    }
}

} // namespace

TruncatedQSym expand_F(const ColouredPermutation &a, std::uint32_t cutoff, Colour colours)
{
    if (cutoff == 0) {
        throw BadParameters("variable cutoff must be at least 1");
    }
    for (const auto &e : a) {
        if (e.colour >= colours) {
            throw ColourOutOfRange("colour " + std::to_string(e.colour) + " outside {0.." +
                                   std::to_string(colours - 1) + "}");
        }
    }
    // strict[j] (0-based) says i_{j+1} < i_{j+2}, i.e. j+1 is in Des*(a).
    std::vector<bool> strict(a.size(), false);
    for (std::uint32_t d : descent_set(a)) {
        if (d > 0) {
            strict[d - 1] = true;
        }
    }
    TruncatedQSym out(cutoff, colours);
    std::vector<std::uint32_t> indices(a.size());
    enumerate_indices(a, strict, cutoff, indices, 0, out);
    return out;
}

TruncatedQSym expand_F(const ColouredPermutation &a, std::uint32_t cutoff)
{
    return expand_F(a, cutoff, inferred_colours(a));
}

bool verify_product_rule(const ColouredPermutation &a, const ColouredPermutation &b, std::uint32_t cutoff)
{
    const auto cs = shuffles(a, b);
    const Colour colours = std::max(inferred_colours(a), inferred_colours(b));
    const auto lhs = expand_F(a, cutoff, colours) * expand_F(b, cutoff, colours);
    TruncatedQSym rhs(cutoff, colours);
    for (const auto &c : cs) {
        rhs += expand_F(c, cutoff, colours);
    }
    return lhs == rhs;
}

PxPoly psi_m(const TruncatedQSym &F, std::uint32_t m)
{
    if (F.cutoff() < m) {
        throw BadParameters("psi_m needs the expansion up to index m");
    }
    PxPoly out;
    for (const auto &[deg, c] : F.terms()) {
        PzMonomial pz;
        std::int64_t x_exp = 0;
        bool vanishes = false;
        for (const auto &[v, k] : deg) {
            if (v.index > m || (v.index == 1 && v.colour != 0)) {
                vanishes = true;
                break;
            }
            pz.p[v.colour] += k;
            x_exp += static_cast<std::int64_t>(v.index - 1) * k;
        }
        if (!vanishes) {
            add_to(out, pz, LaurentPoly(Monomial(c, x_exp)));
        }
    }
    return out;
}

SeriesT psi_series(const ColouredPermutation &a, std::size_t t_order)
{
    const auto F = expand_F(a, static_cast<std::uint32_t>(t_order + 1));
    SeriesT s(t_order);
    for (std::size_t m = 1; m <= t_order + 1; ++m) {
        s[m - 1] = psi_m(F, static_cast<std::uint32_t>(m));
    }
    return s;
}

bool psi_closed_form_check(const ColouredPermutation &a, std::size_t t_order)
{
    return psi_series(a, t_order) == h_map(canonical_statistics_class(a)).expand(t_order);
}

} // namespace colhad
