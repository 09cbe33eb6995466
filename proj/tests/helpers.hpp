#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "colhad/io.hpp"

namespace testing_helpers {

inline colhad::ColouredPermutation P(const std::string &text)
{
    return colhad::parse_permutation(text);
}

inline colhad::LaurentPoly X(std::int64_t k, long c = 1)
{
    return colhad::LaurentPoly(colhad::Monomial(colhad::Rational(c), k));
}

inline colhad::Monomial M(std::int64_t k, long c = 1)
{
    return colhad::Monomial(colhad::Rational(c), k);
}

inline colhad::LabelledConfiguration LC(const std::string &text)
{
    return colhad::parse_labelled_text(text);
}

inline colhad::ColouredPermutation random_permutation(std::mt19937_64 &rng, std::size_t n, colhad::Colour colours,
                                                      colhad::Symbol max_symbol)
{
    std::vector<colhad::Symbol> pool;
    for (colhad::Symbol s = 1; s <= max_symbol; ++s) {
        pool.push_back(s);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<colhad::ColouredInteger> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back({pool[i], static_cast<colhad::Colour>(std::uniform_int_distribution<unsigned>(0, colours - 1)(rng))});
    }
    return colhad::ColouredPermutation(std::move(e));
}

// Up to max_support permutations of length <= max_len on symbols <= max_symbol,
// with a random label on the colours that occur.
inline colhad::LabelledConfiguration random_labelled(std::mt19937_64 &rng, int max_support, std::size_t max_len,
                                                     colhad::Colour colours, colhad::Symbol max_symbol)
{
    colhad::ColouredConfiguration f;
    const int support = std::uniform_int_distribution<int>(1, max_support)(rng);
    for (int i = 0; i < support; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
        f.add(random_permutation(rng, n, colours, max_symbol), std::uniform_int_distribution<unsigned>(1, 3)(rng));
    }
    colhad::Label label;
    for (colhad::Colour c : f.palette_star()) {
        label.set(c, {std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1,
                      std::uniform_int_distribution<int>(-3, 3)(rng)});
    }
    return {std::move(f), std::move(label)};
}

} // namespace testing_helpers
