#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>

#include "colhad/coloured_permutation.hpp"
#include "colhad/laurent.hpp"

namespace colhad {

// +X^k or -X^k.
struct SignedMonomial {
    int sign = 1;
    std::int64_t exponent = 0;

    static SignedMonomial one() { return {}; }
    bool is_one() const { return sign == 1 && exponent == 0; }
    SignedMonomial operator*(const SignedMonomial &o) const { return {sign * o.sign, exponent + o.exponent}; }
    SignedMonomial inverse() const { return {sign, -exponent}; }
    Monomial as_monomial() const { return {Rational(sign), exponent}; }
    friend bool operator==(const SignedMonomial &, const SignedMonomial &) = default;
    friend auto operator<=>(const SignedMonomial &, const SignedMonomial &) = default;
};

// Finitely supported map colour -> {±X^k}; unlisted colours map to +X^0.
// Colour 0 is never in the support.
class Label {
public:
    Label() = default;
    Label(std::initializer_list<std::pair<Colour, SignedMonomial>> values);

    // Throws InvalidLabel when a non-trivial value is assigned to colour 0.
    void set(Colour c, SignedMonomial value);
    SignedMonomial operator()(Colour c) const;
    std::set<Colour> support() const;
    const std::map<Colour, SignedMonomial> &values() const { return values_; }

    friend bool operator==(const Label &, const Label &) = default;

private:
    std::map<Colour, SignedMonomial> values_;
};

// A finite multiset of coloured permutations, kept sorted by the
// permutation order (length, then entrywise colour order).
class ColouredConfiguration {
public:
    using Terms = std::map<ColouredPermutation, std::uint64_t>;

    ColouredConfiguration() = default;
    ColouredConfiguration(std::initializer_list<ColouredPermutation> perms);

    // The configuration holding only the empty permutation; the unit of shuffle.
    static ColouredConfiguration unit();

    void add(const ColouredPermutation &a, std::uint64_t multiplicity = 1);

    const Terms &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    std::uint64_t multiplicity(const ColouredPermutation &a) const;
    std::uint64_t total_multiplicity() const;
    std::size_t max_length() const;

    std::set<Symbol> symbols() const;
    std::set<Colour> palette_star() const;

    friend bool operator==(const ColouredConfiguration &, const ColouredConfiguration &) = default;

private:
    Terms terms_;
};

// (f, alpha) with supp(alpha) inside palette*(f); violated on construction
// raises InvalidLabel.
class LabelledConfiguration {
public:
    LabelledConfiguration() = default;
    LabelledConfiguration(ColouredConfiguration config, Label label);

    const ColouredConfiguration &config() const { return config_; }
    const Label &label() const { return label_; }

    friend bool operator==(const LabelledConfiguration &, const LabelledConfiguration &) = default;

private:
    ColouredConfiguration config_;
    Label label_;
};

SignedMonomial evaluate_label(const Label &label, const ColouredPermutation &a);

bool are_disjoint(const ColouredConfiguration &f, const ColouredConfiguration &g);
bool are_strongly_disjoint(const ColouredConfiguration &f, const ColouredConfiguration &g);

// Bi-additive extension of the shuffle product. Throws SymbolOverlap.
ColouredConfiguration config_shuffle(const ColouredConfiguration &f, const ColouredConfiguration &g);

// Applies order-preserving maps on symbols and on nonzero colours. Both maps
// must be defined on every symbol / nonzero colour that occurs.
LabelledConfiguration relabel(const LabelledConfiguration &lc, const std::map<Symbol, Symbol> &symbol_map,
                              const std::map<Colour, Colour> &colour_map);

// Representative of the equivalence class: symbols onto {1..k}, nonzero
// colours onto {1..m}, label transported.
LabelledConfiguration canonicalize(const LabelledConfiguration &lc);

// An equivalent copy of rhs whose symbols and nonzero colours avoid those of
// lhs. rhs is returned untouched when it is already strongly disjoint.
LabelledConfiguration make_strongly_disjoint(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs);

bool check_coherence(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs);

// alpha ∪ beta. Throws NotCoherent.
Label merge_labels(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs);

} // namespace colhad
