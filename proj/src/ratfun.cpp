#include "colhad/ratfun.hpp"

#include <algorithm>

#include "colhad/error.hpp"

namespace colhad {

Monomial power(const Monomial &m, std::uint64_t k)
{
    return {power(m.coeff, static_cast<std::int64_t>(k)), m.exponent * static_cast<std::int64_t>(k)};
}

YPolynomial YPolynomial::term(std::size_t k, const LaurentPoly &c)
{
    YPolynomial p;
    p.add_term(k, c);
    return p;
}

YPolynomial YPolynomial::one_minus(const Monomial &m)
{
    YPolynomial p(LaurentPoly(1));
    p.add_term(1, -LaurentPoly(m));
    return p;
}

LaurentPoly YPolynomial::coefficient(std::size_t k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void YPolynomial::add_term(std::size_t k, const LaurentPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

YPolynomial &YPolynomial::operator+=(const YPolynomial &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

YPolynomial &YPolynomial::operator-=(const YPolynomial &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, -c);
    }
    return *this;
}

YPolynomial operator*(const YPolynomial &a, const YPolynomial &b)
{
    YPolynomial r;
    for (const auto &[ka, ca] : a.terms_) {
        for (const auto &[kb, cb] : b.terms_) {
            r.add_term(ka + kb, ca * cb);
        }
    }
    return r;
}

YPolynomial YPolynomial::scale_y(const Monomial &m) const
{
    YPolynomial r;
    for (const auto &[k, c] : terms_) {
        r.add_term(k, c.times(power(m, k)));
    }
    return r;
}

YPolynomial YPolynomial::substitute_x(const Rational &x) const
{
    if (x == 0) {
        throw ZeroSubstitution("cannot substitute X = 0");
    }
    YPolynomial r;
    for (const auto &[k, c] : terms_) {
        r.add_term(k, LaurentPoly(c.evaluate(x)));
    }
    return r;
}

SeriesY::SeriesY(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        coeffs_.resize(1);
    }
}

namespace {

void require_same_order(const SeriesY &a, const SeriesY &b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("series truncated at orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
    }
}

} // namespace

SeriesY operator+(const SeriesY &a, const SeriesY &b)
{
    require_same_order(a, b);
    SeriesY r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        r[k] = a[k] + b[k];
    }
    return r;
}

SeriesY operator*(const SeriesY &a, const SeriesY &b)
{
    require_same_order(a, b);
    SeriesY r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= a.order(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

SeriesY SeriesY::scale_y(const Monomial &m) const
{
    SeriesY r(order());
    for (std::size_t k = 0; k <= order(); ++k) {
        r[k] = coeffs_[k].times(power(m, k));
    }
    return r;
}

SeriesY SeriesY::truncate(std::size_t order) const
{
    SeriesY r(order);
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) {
        r[k] = coeffs_[k];
    }
    return r;
}

SeriesY hadamard_series(const SeriesY &a, const SeriesY &b)
{
    require_same_order(a, b);
    SeriesY r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        r[k] = a[k] * b[k];
    }
    return r;
}

RationalGF::RationalGF(YPolynomial numerator, Denominator denominator) : numerator_(std::move(numerator))
{
    for (auto &[m, k] : denominator) {
        if (m.coeff != 0 && k > 0) {
            denominator_[m] += k;
        }
    }
}

RationalGF RationalGF::from_factors(const LaurentPoly &constant, const std::vector<Monomial> &numerator_factors,
                                    const std::vector<Monomial> &denominator_factors)
{
    YPolynomial num(constant);
    for (const auto &m : numerator_factors) {
        num *= YPolynomial::one_minus(m);
    }
    Denominator den;
    for (const auto &m : denominator_factors) {
        ++den[m];
    }
    return RationalGF(std::move(num), std::move(den));
}

namespace {

YPolynomial expand_factors(const RationalGF::Denominator &den)
{
    YPolynomial p(LaurentPoly(1));
    for (const auto &[m, k] : den) {
        for (unsigned i = 0; i < k; ++i) {
            p *= YPolynomial::one_minus(m);
        }
    }
    return p;
}

} // namespace

YPolynomial RationalGF::denominator_polynomial() const
{
    return expand_factors(denominator_);
}

RationalGF operator+(const RationalGF &a, const RationalGF &b)
{
    RationalGF::Denominator common = a.denominator_;
    for (const auto &[m, k] : b.denominator_) {
        common[m] = std::max(common[m], k);
    }
    auto missing = [&](const RationalGF::Denominator &own) {
        RationalGF::Denominator rest;
        for (const auto &[m, k] : common) {
            auto it = own.find(m);
            const unsigned have = it == own.end() ? 0 : it->second;
            if (k > have) {
                rest[m] = k - have;
            }
        }
        return expand_factors(rest);
    };
    return RationalGF(a.numerator_ * missing(a.denominator_) + b.numerator_ * missing(b.denominator_), common);
}

RationalGF operator*(const RationalGF &a, const RationalGF &b)
{
    RationalGF::Denominator den = a.denominator_;
    for (const auto &[m, k] : b.denominator_) {
        den[m] += k;
    }
    return RationalGF(a.numerator_ * b.numerator_, std::move(den));
}

RationalGF RationalGF::scale_y(const Monomial &m) const
{
    Denominator den;
    for (const auto &[f, k] : denominator_) {
        den[f * m] += k;
    }
    return RationalGF(numerator_.scale_y(m), std::move(den));
}

RationalGF RationalGF::substitute_x(const Rational &x) const
{
    if (x == 0) {
        throw ZeroSubstitution("cannot substitute X = 0");
    }
    Denominator den;
    for (const auto &[f, k] : denominator_) {
        den[Monomial(f.evaluate(x), 0)] += k;
    }
    return RationalGF(numerator_.substitute_x(x), std::move(den));
}

SeriesY expand(const RationalGF &r, std::size_t order)
{
    SeriesY s(order);
    for (const auto &[k, c] : r.numerator().terms()) {
        if (k <= order) {
            s[k] = c;
        }
    }
    // Divide by each (1 - mY): s'_k = s_k + m s'_{k-1}.
    for (const auto &[m, mult] : r.denominator()) {
        for (unsigned rep = 0; rep < mult; ++rep) {
            for (std::size_t k = 1; k <= order; ++k) {
                if (!s[k - 1].is_zero()) {
                    s[k] += s[k - 1].times(m);
                }
            }
        }
    }
    return s;
}

bool equal(const RationalGF &a, const RationalGF &b)
{
    RationalGF::Denominator only_a;
    RationalGF::Denominator only_b;
    for (const auto &[m, k] : a.denominator()) {
        auto it = b.denominator().find(m);
        const unsigned kb = it == b.denominator().end() ? 0 : it->second;
        if (k > kb) {
            only_a[m] = k - kb;
        }
    }
    for (const auto &[m, k] : b.denominator()) {
        auto it = a.denominator().find(m);
        const unsigned ka = it == a.denominator().end() ? 0 : it->second;
        if (k > ka) {
            only_b[m] = k - ka;
        }
    }
    return a.numerator() * expand_factors(only_b) == b.numerator() * expand_factors(only_a);
}

RationalGF substitute(const RationalGF &r, const Rational &x_value, const Monomial &y_scale)
{
    if (x_value == 0) {
        throw ZeroSubstitution("cannot substitute X = 0");
    }
    return r.substitute_x(x_value).scale_y(Monomial(y_scale.evaluate(x_value), 0));
}

RationalGF::Denominator staircase_denominator(std::int64_t eps, std::size_t n)
{
    RationalGF::Denominator den;
    for (std::size_t i = 0; i <= n; ++i) {
        ++den[Monomial(Rational(1), eps * static_cast<std::int64_t>(i))];
    }
    return den;
}

RationalGF w_of(const LabelledConfiguration &lc, std::int64_t eps)
{
    const auto &config = lc.config();
    if (config.empty()) {
        return {};
    }
    const std::size_t L = config.max_length();
    // Group the summands by length: each length shares one completion factor.
    std::vector<YPolynomial> by_length(L + 1);
    for (const auto &[a, mult] : config.terms()) {
        const auto st = stat_triple(a);
        const auto label = evaluate_label(lc.label(), a);
        const auto exponent = label.exponent + eps * static_cast<std::int64_t>(st.comaj);
        by_length[a.size()].add_term(st.des, LaurentPoly(Monomial(Rational(label.sign) * mult, exponent)));
    }
    YPolynomial numerator;
    // tail = prod_{i=j+1}^{L} (1 - X^{eps i} Y), built from j = L downwards
    YPolynomial tail(LaurentPoly(1));
    for (std::size_t j = L + 1; j-- > 0;) {
        if (!by_length[j].is_zero()) {
            numerator += by_length[j] * tail;
        }
        if (j > 0) {
            tail *= YPolynomial::one_minus(Monomial(Rational(1), eps * static_cast<std::int64_t>(j)));
        }
    }
    return RationalGF(std::move(numerator), staircase_denominator(eps, L));
}

} // namespace colhad
