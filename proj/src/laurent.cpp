#include "colhad/laurent.hpp"

#include <cctype>
#include <sstream>

#include "colhad/error.hpp"

namespace colhad {

std::string to_string(const Rational &q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

Rational parse_rational(const std::string &text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    bool digits = false;
    bool slash = false;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits = true;
        } else if (text[i] == '/' && digits && !slash) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("invalid rational '" + text + "'", i);
        }
    }
    if (!digits) {
        throw ParseError("invalid rational '" + text + "'", text.size());
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q;
    if (q.set_str(body, 10) != 0) {
        throw ParseError("invalid rational '" + text + "'", 0);
    }
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in '" + text + "'", 0);
    }
    q.canonicalize();
    return q;
}

Rational power(const Rational &q, std::int64_t k)
{
    Rational base = q;
    if (k < 0) {
        if (q == 0) {
            throw ZeroSubstitution("negative power of zero");
        }
        base = 1 / q;
        k = -k;
    }
    Rational result(1);
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        base *= base;
        k >>= 1;
    }
    return result;
}

Rational LaurentPoly::coefficient(std::int64_t e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace(e, -c);
    }
    return r;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly r;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::times(const Monomial &m) const
{
    LaurentPoly r;
    if (m.coeff == 0) {
        return r;
    }
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e + m.exponent, c * m.coeff);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

Rational LaurentPoly::evaluate(const Rational &x) const
{
    Rational sum(0);
    for (const auto &[e, c] : terms_) {
        sum += c * power(x, e);
    }
    return sum;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << colhad::to_string(mag);
            continue;
        }
        if (mag != 1) {
            out << colhad::to_string(mag) << "*";
        }
        out << "X";
        if (e != 1) {
            out << "^" << e;
        }
    }
    return out.str();
}

bool lex_less(const LaurentPoly &a, const LaurentPoly &b)
{
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return ia->first < ib->first;
        }
        if (ia->second != ib->second) {
            return ia->second < ib->second;
        }
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

} // namespace colhad
