#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "colhad/configuration.hpp"
#include "colhad/ratfun.hpp"
#include "colhad/shuffle_algebra.hpp"

namespace colhad {

using json = nlohmann::json;

// Text notation: whitespace separated `symbol^colour` tokens, `^colour`
// optional for colour 0. "" and "()" denote the empty permutation.
ColouredPermutation parse_permutation(std::string_view text);
std::string format_permutation(const ColouredPermutation &a);

// `-X^k`, `X^k`, `+X`, `-1`, `1`, ...
SignedMonomial parse_signed_monomial(std::string_view text);
std::string format_signed_monomial(const SignedMonomial &m);

// Line based format:
//   2 * 1^0 2^2     multiplicity, then a permutation ("()" for the empty one)
//   1^1 2^0         multiplicity 1
//   1 -> -X^-2      label value of a colour
// Blank lines and text after '#' are ignored.
LabelledConfiguration parse_labelled_text(std::string_view text);
std::string format_labelled_text(const LabelledConfiguration &lc);

json to_json(const ColouredPermutation &a);
ColouredPermutation permutation_from_json(const json &j);
json to_json(const ColouredConfiguration &f);
ColouredConfiguration configuration_from_json(const json &j);
json to_json(const Label &label);
Label label_from_json(const json &j);
// {"configuration": [...], "label": [...]}
json to_json(const LabelledConfiguration &lc);
LabelledConfiguration labelled_from_json(const json &j);

// Parses JSON when the text starts with '{', the line format otherwise.
LabelledConfiguration parse_labelled(std::string_view text);

// {"numerator": [{"y", "x", "coeff"}], "denominator": [{"coeff", "x", "mult"}]}
// with coefficients as exact "p/q" strings.
json to_json(const RationalGF &r);
RationalGF rational_gf_from_json(const json &j);

json to_json(const LaurentPoly &p);
json to_json(const SeriesY &s);
json to_json(const StatTriple &st);
json to_json(const ColouredDescentSet &s);
json to_json(const CompatibilityReport &report);

// Factored-denominator display, e.g. \frac{1 - X^{-1} Y}{(1 - Y)(1 - X Y)}.
std::string to_latex(const LaurentPoly &p);
std::string to_latex(const RationalGF &r);
// Plain text, e.g. (1 - X^-1*Y) / ((1 - Y)(1 - X*Y)).
std::string to_text(const RationalGF &r);

} // namespace colhad
