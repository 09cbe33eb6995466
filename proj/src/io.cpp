#include "colhad/io.hpp"

#include <cctype>
#include <sstream>

#include "colhad/error.hpp"

namespace colhad {

namespace {

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::uint64_t read_unsigned(std::string_view text, std::size_t &i, std::size_t offset, const char *what)
{
    if (i >= text.size() || !is_digit(text[i])) {
        throw ParseError(std::string("expected ") + what, offset + i);
    }
    std::uint64_t v = 0;
    for (; i < text.size() && is_digit(text[i]); ++i) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffULL) {
            throw ParseError(std::string(what) + " out of range", offset + i);
        }
    }
    return v;
}

std::int64_t read_signed(std::string_view text, std::size_t &i, std::size_t offset, const char *what)
{
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    const auto v = static_cast<std::int64_t>(read_unsigned(text, i, offset, what));
    return negative ? -v : v;
}

ColouredPermutation parse_permutation_at(std::string_view text, std::size_t offset)
{
    std::vector<ColouredInteger> entries;
    std::size_t i = 0;
    while (true) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        if (i >= text.size()) {
            break;
        }
        if (text.substr(i, 2) == "()") {
            i += 2;
            continue;
        }
        const std::size_t start = i;
        const auto symbol = read_unsigned(text, i, offset, "symbol");
        Colour colour = 0;
        if (i < text.size() && text[i] == '^') {
            ++i;
            colour = static_cast<Colour>(read_unsigned(text, i, offset, "colour"));
        }
        if (i < text.size() && !is_space(text[i])) {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", offset + i);
        }
        if (symbol == 0) {
            throw ParseError("symbols must be positive", offset + start);
        }
        entries.push_back({static_cast<Symbol>(symbol), colour});
    }
    try {
        return ColouredPermutation(std::move(entries));
    } catch (const InvalidPermutation &e) {
        throw ParseError(e.what(), offset);
    }
}

SignedMonomial parse_signed_monomial_at(std::string_view text, std::size_t offset)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
    };
    skip();
    SignedMonomial m;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        m.sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
    }
    if (i < text.size() && text[i] == 'X') {
        ++i;
        m.exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            const bool braced = i < text.size() && text[i] == '{';
            if (braced) {
                ++i;
            }
            m.exponent = read_signed(text, i, offset, "exponent");
            if (braced) {
                if (i >= text.size() || text[i] != '}') {
                    throw ParseError("expected '}'", offset + i);
                }
                ++i;
            }
        }
    } else if (i < text.size() && text[i] == '1') {
        ++i;
    } else {
        throw ParseError("expected a signed monomial such as -X^-2", offset + i);
    }
    skip();
    if (i != text.size()) {
        throw ParseError("trailing characters in monomial", offset + i);
    }
    return m;
}

} // namespace

ColouredPermutation parse_permutation(std::string_view text)
{
    return parse_permutation_at(text, 0);
}

std::string format_permutation(const ColouredPermutation &a)
{
    return a.to_string();
}

SignedMonomial parse_signed_monomial(std::string_view text)
{
    return parse_signed_monomial_at(text, 0);
}

std::string format_signed_monomial(const SignedMonomial &m)
{
    std::string s = m.sign < 0 ? "-" : "";
    if (m.exponent == 0) {
        return s + "1";
    }
    s += "X";
    if (m.exponent != 1) {
        s += "^" + std::to_string(m.exponent);
    }
    return s;
}

LabelledConfiguration parse_labelled_text(std::string_view text)
{
    ColouredConfiguration config;
    Label label;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = text.size();
        }
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::size_t offset = line_start;
        line_start = line_end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        if (auto arrow = line.find("->"); arrow != std::string_view::npos) {
            std::size_t i = 0;
            while (i < arrow && is_space(line[i])) {
                ++i;
            }
            const auto colour = read_unsigned(line, i, offset, "colour");
            while (i < arrow && is_space(line[i])) {
                ++i;
            }
            if (i != arrow) {
                throw ParseError("expected '->' after colour", offset + i);
            }
            try {
                label.set(static_cast<Colour>(colour), parse_signed_monomial_at(line.substr(arrow + 2), offset + arrow + 2));
            } catch (const InvalidLabel &e) {
                throw ParseError(e.what(), offset);
            }
            continue;
        }
        std::uint64_t mult = 1;
        std::string_view perm_text = line;
        if (auto star = line.find('*'); star != std::string_view::npos) {
            std::size_t i = 0;
            while (i < star && is_space(line[i])) {
                ++i;
            }
            mult = read_unsigned(line, i, offset, "multiplicity");
            while (i < star && is_space(line[i])) {
                ++i;
            }
            if (i != star) {
                throw ParseError("expected '*' after multiplicity", offset + i);
            }
            if (mult == 0) {
                throw ParseError("multiplicity must be positive", offset);
            }
            perm_text = line.substr(star + 1);
            config.add(parse_permutation_at(perm_text, offset + star + 1), mult);
        } else {
            config.add(parse_permutation_at(perm_text, offset), mult);
        }
    }
    try {
        return {std::move(config), std::move(label)};
    } catch (const InvalidLabel &e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_labelled_text(const LabelledConfiguration &lc)
{
    std::ostringstream out;
    for (const auto &[a, m] : lc.config().terms()) {
        out << m << " * " << (a.empty() ? "()" : a.to_string()) << "\n";
    }
    for (const auto &[c, v] : lc.label().values()) {
        out << c << " -> " << format_signed_monomial(v) << "\n";
    }
    return out.str();
}

json to_json(const ColouredPermutation &a)
{
    json j = json::array();
    for (const auto &e : a) {
        j.push_back({e.symbol, e.colour});
    }
    return j;
}

namespace {

template <typename Fn>
auto json_guard(Fn &&fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
    } catch (const InvalidPermutation &e) {
        throw ParseError(e.what(), 0);
    } catch (const InvalidLabel &e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace

ColouredPermutation permutation_from_json(const json &j)
{
    return json_guard([&] {
        std::vector<ColouredInteger> entries;
        if (!j.is_array()) {
            throw ParseError("a permutation must be a JSON array", 0);
        }
        for (const auto &pair : j) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("permutation entries must be [symbol, colour] pairs", 0);
            }
            entries.push_back({pair.at(0).get<Symbol>(), pair.at(1).get<Colour>()});
        }
        return ColouredPermutation(std::move(entries));
    });
}

json to_json(const ColouredConfiguration &f)
{
    json j = json::array();
    for (const auto &[a, m] : f.terms()) {
        j.push_back({{"perm", to_json(a)}, {"mult", m}});
    }
    return j;
}

ColouredConfiguration configuration_from_json(const json &j)
{
    return json_guard([&] {
        ColouredConfiguration f;
        for (const auto &term : j) {
            const auto mult = term.contains("mult") ? term.at("mult").get<std::uint64_t>() : 1;
            if (mult == 0) {
                throw ParseError("multiplicity must be positive", 0);
            }
            f.add(permutation_from_json(term.at("perm")), mult);
        }
        return f;
    });
}

json to_json(const Label &label)
{
    json j = json::array();
    for (const auto &[c, v] : label.values()) {
        j.push_back({{"colour", c}, {"sign", v.sign}, {"exponent", v.exponent}});
    }
    return j;
}

Label label_from_json(const json &j)
{
    return json_guard([&] {
        Label label;
        for (const auto &v : j) {
            label.set(v.at("colour").get<Colour>(), {v.at("sign").get<int>(), v.at("exponent").get<std::int64_t>()});
        }
        return label;
    });
}

json to_json(const LabelledConfiguration &lc)
{
    return {{"configuration", to_json(lc.config())}, {"label", to_json(lc.label())}};
}

LabelledConfiguration labelled_from_json(const json &j)
{
    return json_guard([&] {
        auto config = configuration_from_json(j.at("configuration"));
        auto label = j.contains("label") ? label_from_json(j.at("label")) : Label{};
        return LabelledConfiguration(std::move(config), std::move(label));
    });
}

LabelledConfiguration parse_labelled(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
        }
        return labelled_from_json(j);
    }
    return parse_labelled_text(text);
}

json to_json(const RationalGF &r)
{
    json num = json::array();
    for (const auto &[k, c] : r.numerator().terms()) {
        for (const auto &[e, q] : c.terms()) {
            num.push_back({{"y", k}, {"x", e}, {"coeff", to_string(q)}});
        }
    }
    json den = json::array();
    for (const auto &[m, k] : r.denominator()) {
        den.push_back({{"coeff", to_string(m.coeff)}, {"x", m.exponent}, {"mult", k}});
    }
    return {{"numerator", num}, {"denominator", den}};
}

RationalGF rational_gf_from_json(const json &j)
{
    return json_guard([&] {
        YPolynomial num;
        for (const auto &t : j.at("numerator")) {
            num.add_term(t.at("y").get<std::size_t>(),
                         LaurentPoly(Monomial(parse_rational(t.at("coeff").get<std::string>()),
                                              t.at("x").get<std::int64_t>())));
        }
        RationalGF::Denominator den;
        for (const auto &f : j.at("denominator")) {
            den[Monomial(parse_rational(f.at("coeff").get<std::string>()), f.at("x").get<std::int64_t>())] +=
                f.at("mult").get<unsigned>();
        }
        return RationalGF(std::move(num), std::move(den));
    });
}

json to_json(const LaurentPoly &p)
{
    json j = json::object();
    for (const auto &[e, c] : p.terms()) {
        j[std::to_string(e)] = to_string(c);
    }
    return j;
}

json to_json(const SeriesY &s)
{
    json j = json::array();
    for (const auto &c : s.coefficients()) {
        j.push_back(c.to_string());
    }
    return j;
}

json to_json(const StatTriple &st)
{
    json col = json::object();
    for (const auto &[c, k] : st.col) {
        col[std::to_string(c)] = k;
    }
    return {{"des", st.des}, {"comaj", st.comaj}, {"col", col}};
}

json to_json(const ColouredDescentSet &s)
{
    json j = json::array();
    for (const auto &[i, c] : s.elements) {
        j.push_back({i, c});
    }
    return j;
}

json to_json(const CompatibilityReport &report)
{
    json j = {{"statistic", report.statistic},
              {"trials", report.random_trials},
              {"exhaustive_pairs", report.exhaustive_pairs},
              {"relabel_checks", report.relabel_checks},
              {"compatible", report.compatible()}};
    if (report.counterexample) {
        const auto &ce = *report.counterexample;
        j["counterexample"] = {{"kind", ce.kind},
                               {"a", ce.a.to_string()},
                               {"b", ce.b.to_string()},
                               {"a2", ce.a2.to_string()},
                               {"b2", ce.b2.to_string()}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

namespace {

std::string latex_power(const char *var, std::int64_t e)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return var;
    }
    return std::string(var) + "^{" + std::to_string(e) + "}";
}

std::string latex_rational(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

// Pieces of a signed term: sign and the unsigned body ("" for a bare 1).
std::string latex_term_body(const Rational &mag, const std::string &monomial)
{
    if (monomial.empty()) {
        return latex_rational(mag);
    }
    if (mag == 1) {
        return monomial;
    }
    return latex_rational(mag) + " " + monomial;
}

std::string text_power(const char *var, std::int64_t e)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return var;
    }
    return std::string(var) + "^" + std::to_string(e);
}

std::string join_monomial(const std::string &a, const std::string &b, const char *sep)
{
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    return a + sep + b;
}

// Sum of c * X^e * Y^k written out term by term.
template <typename PowerFn, typename RationalFn>
std::string render_numerator(const YPolynomial &num, PowerFn power_of, RationalFn rational, const char *sep)
{
    if (num.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[k, c] : num.terms()) {
        const std::string y = power_of("Y", static_cast<std::int64_t>(k));
        for (const auto &[e, q] : c.terms()) {
            const Rational mag = abs(q);
            const std::string mono = join_monomial(power_of("X", e), y, sep);
            std::string body = mono.empty() ? rational(mag) : (mag == 1 ? mono : rational(mag) + sep + mono);
            if (first) {
                out += (q < 0 ? "-" : "") + body;
            } else {
                out += (q < 0 ? " - " : " + ") + body;
            }
            first = false;
        }
    }
    return out;
}

template <typename PowerFn, typename RationalFn>
std::string render_denominator(const RationalGF::Denominator &den, PowerFn power_of, RationalFn rational,
                               const char *sep)
{
    std::string out;
    for (const auto &[m, k] : den) {
        const Rational mag = abs(m.coeff);
        const std::string mono = join_monomial(power_of("X", m.exponent), "Y", sep);
        std::string factor = "(1 " + std::string(m.coeff > 0 ? "- " : "+ ") +
                             (mag == 1 ? mono : rational(mag) + sep + mono) + ")";
        if (k > 1) {
            factor += sep[0] == ' ' ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
        }
        out += factor;
    }
    return out;
}

} // namespace

std::string to_latex(const LaurentPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, q] : p.terms()) {
        const std::string body = latex_term_body(abs(q), latex_power("X", e));
        out += first ? (q < 0 ? "-" : "") + body : (q < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string to_latex(const RationalGF &r)
{
    const std::string num = render_numerator(r.numerator(), latex_power, latex_rational, " ");
    if (r.denominator().empty()) {
        return num;
    }
    return "\\frac{" + num + "}{" + render_denominator(r.denominator(), latex_power, latex_rational, " ") + "}";
}

std::string to_text(const RationalGF &r)
{
    auto rational = [](const Rational &q) { return to_string(q); };
    const std::string num = render_numerator(r.numerator(), text_power, rational, "*");
    if (r.denominator().empty()) {
        return num;
    }
    return "(" + num + ") / (" + render_denominator(r.denominator(), text_power, rational, "*") + ")";
}

} // namespace colhad
