#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "colhad/configuration.hpp"
#include "colhad/ratfun.hpp"

namespace colhad {

enum class Family {
    mat,              // ask, Mat_{d x e}; params d, e
    so,               // ask, so_d (= Mat_{d x (d-1)}); param d
    f2d_cc,           // class counting, F_{2,d}; param d
    threshold,        // ask, Delta_n v K_{n+1}; param n
    threshold_cc,     // class counting, graphical group of Delta_n v K_{n+1}; param n
    tn,               // ask, T_n; param n
    tn_cc,            // class counting, graphical group of T_n; param n
    unitriangular_oc, // orbit counting, U_{d+1}; param d
};

std::string family_name(Family f);
// Throws UnknownFamily.
Family parse_family(const std::string &name);
std::vector<Family> all_families();
// Number of integer parameters the family takes.
std::size_t family_arity(Family f);

// One row of the catalog: Z(Y) = W^eps_{f,alpha}(X, u(X) Y) with X <- q.
struct ZetaEntry {
    Family family{};
    std::vector<std::int64_t> params;
    std::string zeta_name;
    LabelledConfiguration config;
    std::int64_t eps = 0;
    SignedMonomial shift;
    // W^eps_{f,alpha}(X, Y) in the product form of the table.
    RationalGF table_form;
    // Z(Y) with q kept as the symbol X, i.e. W^eps_{f,alpha}(X, u(X) Y).
    RationalGF closed_form;
    // Restrictions on the residue field under which Z is given by this row.
    std::vector<std::string> conditions;
};

// Builds the row and checks both closed forms against W; throws
// UnknownFamily / BadParameters, or Error if an identity fails.
ZetaEntry build_entry(Family family, const std::vector<std::int64_t> &params);

// The sum of all 2^k coloured permutations first^{v} ... last^{v} with each
// v_i in {0, i}; `underline(1, n)` is the n-underline configuration.
ColouredConfiguration underline(Symbol first, Symbol last);

// All {0, sigma_i}-colourings of each permutation in P.
ColouredConfiguration pi_of(const std::vector<ColouredPermutation> &perms);

std::vector<ColouredPermutation> symmetric_group(std::size_t n);

// Largest configuration (number of support terms) the Hadamard formulas
// enumerate: 2^7 * 7!.
inline constexpr std::uint64_t max_formula_terms = 645120;

struct ZetaProduct {
    LabelledConfiguration config;
    std::int64_t eps = 0;
    RationalGF w;
    // The zeta function of the product is w(X, shift * Y).
    SignedMonomial shift;
    std::vector<std::string> conditions;
    // |S_n| or |T|
    std::uint64_t permutation_count = 0;
};

// Ask zeta function of Mat_{d_1 x e_1} + ... + Mat_{d_n x e_n} with all
// d_i - e_i equal. Throws DeltaMismatch, BadParameters, TooLarge.
ZetaProduct hadamard_mde(const std::vector<std::pair<std::int64_t, std::int64_t>> &dims);

// Class counting of F_{2,d_1} x ... x F_{2,d_n}; `w` is the ask form
// Z^cc(X^{-sum binom(d_i,2)} Y).
ZetaProduct hadamard_f2d(const std::vector<std::int64_t> &d_list);

// Orbit counting of U_{d_1+1} x ... x U_{d_n+1}; `w` is Z^oc(X^{-n} Y).
ZetaProduct hadamard_ud(const std::vector<std::int64_t> &d_list);

// The shuffle of the increasing blocks (D_{i-1}+1)...D_i.
std::vector<ColouredPermutation> block_shuffle_set(const std::vector<std::int64_t> &d_list);

} // namespace colhad
