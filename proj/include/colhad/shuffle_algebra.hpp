#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colhad/configuration.hpp"
#include "colhad/ratfun.hpp"

namespace colhad {

struct HadamardResult {
    LabelledConfiguration product; // (f ⧢ g, alpha ∪ beta)
    RationalGF w;                  // W^eps of the product
};

// Closed form of W^eps_{f,alpha} *_Y W^eps_{g,beta} for a coherent pair.
// Throws NotCoherent.
HadamardResult hadamard_via_theorem(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs,
                                    std::int64_t eps);

// Same product for an arbitrary pair: rhs is first replaced by an equivalent
// configuration strongly disjoint from lhs.
HadamardResult hadamard_general_product(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs,
                                        std::int64_t eps);
RationalGF hadamard_general(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs, std::int64_t eps);

// --- shuffle compatibility -------------------------------------------------

using StatValue = std::vector<std::int64_t>;
using Statistic = std::function<StatValue(std::span<const ColouredInteger>)>;

struct NamedStatistic {
    std::string name;
    Statistic evaluate;
};

namespace statistics {
// (des, comaj, col)
NamedStatistic des_comaj_col();
NamedStatistic s_des();
// Value of the first symbol; not invariant under relabelling.
NamedStatistic first_symbol();
// Position of the largest entry in colour order; relabelling invariant but
// not shuffle compatible.
NamedStatistic max_position();
// Looks up one of the names above; nullopt if unknown.
std::optional<NamedStatistic> by_name(const std::string &name);
} // namespace statistics

struct CompatibilityOptions {
    // Exhaustive over all pairs with |a| + |b| <= max_total_length.
    std::size_t max_total_length = 4;
    // Colours drawn from {0, ..., colours - 1}.
    Colour colours = 3;
    // Additional random pairs, lengths up to max_total_length + 2 in total.
    std::size_t trials = 0;
    std::uint64_t seed = 1;
};

struct Counterexample {
    // "relabelling": a2 is an order-preserving relabelling of a with a
    // different value. "shuffle": the statistics of (a, b) and (a2, b2)
    // agree but the multisets over the shuffles differ.
    std::string kind;
    ColouredPermutation a;
    ColouredPermutation b;
    ColouredPermutation a2;
    ColouredPermutation b2;
};

struct CompatibilityReport {
    std::string statistic;
    std::size_t exhaustive_pairs = 0;
    std::size_t random_trials = 0;
    std::size_t relabel_checks = 0;
    std::optional<Counterexample> counterexample;

    bool compatible() const { return !counterexample.has_value(); }
};

CompatibilityReport check_shuffle_compatibility(const NamedStatistic &stat, const CompatibilityOptions &options);

// All coloured permutations of {1..n} with colours below `colours`.
std::vector<ColouredPermutation> all_coloured_permutations(std::size_t n, Colour colours);

// --- the (des, comaj, col) shuffle algebra in Q[p, x, z][[t]] ---------------

// p_0^{v_0} p_1^{v_1} ... z^k
struct PzMonomial {
    std::map<Colour, std::uint32_t> p;
    std::uint32_t z = 0;

    PzMonomial operator*(const PzMonomial &o) const;
    friend bool operator==(const PzMonomial &, const PzMonomial &) = default;
    friend auto operator<=>(const PzMonomial &, const PzMonomial &) = default;
};

// Polynomial in p, z with Laurent coefficients in x.
using PxPoly = std::map<PzMonomial, LaurentPoly>;

void add_to(PxPoly &target, const PzMonomial &m, const LaurentPoly &c);
PxPoly multiply(const PxPoly &a, const PxPoly &b);

// Truncated series in t over Q[p, x, z].
class SeriesT {
public:
    explicit SeriesT(std::size_t order) : coeffs_(order + 1) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    const PxPoly &operator[](std::size_t k) const { return coeffs_[k]; }
    PxPoly &operator[](std::size_t k) { return coeffs_[k]; }

    SeriesT &operator+=(const SeriesT &o);
    friend bool operator==(const SeriesT &, const SeriesT &) = default;

private:
    std::vector<PxPoly> coeffs_;
};

SeriesT hadamard_t(const SeriesT &a, const SeriesT &b);

// pz * x^x_exponent * t^t_exponent / ((1-t)(1-xt)...(1-x^length t))
struct HImage {
    PzMonomial pz;
    std::int64_t x_exponent = 0;
    std::size_t t_exponent = 0;
    std::size_t length = 0;

    SeriesT expand(std::size_t order) const;
    std::string to_string() const;
};

HImage h_map(const StatKey &key);
HImage h_tilde_map(const StatKey &key);

// H(sum_a f_a [a]) expanded to the given t-order.
SeriesT h_image_series(const ColouredConfiguration &f, std::size_t order, bool tilde = false);

// Lowest nonzero t-coefficient, or nullopt for the zero series.
std::optional<std::pair<std::size_t, PxPoly>> leading_term(const SeriesT &s);

} // namespace colhad
