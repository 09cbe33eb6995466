#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace colhad {

using Symbol = std::uint32_t;
// Colour 0 is "uncoloured". Larger integers sit lower in the colour poset
// 0 > 1 > 2 > ..., so colour c is encoded by the integer c and comparisons
// between different colours are reversed.
using Colour = std::uint32_t;

// A coloured positive integer symbol^colour.
struct ColouredInteger {
    Symbol symbol = 1;
    Colour colour = 0;

    friend bool operator==(const ColouredInteger &, const ColouredInteger &) = default;
    // Colour order: ... < 1^1 < 2^1 < ... < 1^0 < 2^0 < ...
    friend std::strong_ordering operator<=>(const ColouredInteger &a, const ColouredInteger &b)
    {
        if (a.colour != b.colour) {
            return b.colour <=> a.colour;
        }
        return a.symbol <=> b.symbol;
    }
};

inline std::strong_ordering compare(const ColouredInteger &a, const ColouredInteger &b)
{
    return a <=> b;
}

// A word of coloured integers with pairwise distinct symbols. The empty word
// is a valid value.
class ColouredPermutation {
public:
    ColouredPermutation() = default;
    // Throws InvalidPermutation on a zero or repeated symbol.
    explicit ColouredPermutation(std::vector<ColouredInteger> entries);
    ColouredPermutation(std::initializer_list<ColouredInteger> entries)
        : ColouredPermutation(std::vector<ColouredInteger>(entries))
    {
    }

    // Skips validation; callers guarantee positive distinct symbols.
    static ColouredPermutation unchecked(std::vector<ColouredInteger> entries)
    {
        ColouredPermutation a;
        a.entries_ = std::move(entries);
        return a;
    }

    // Uncoloured permutation from its one-line notation.
    static ColouredPermutation uncoloured(const std::vector<Symbol> &symbols);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const ColouredInteger &operator[](std::size_t i) const { return entries_[i]; }
    std::span<const ColouredInteger> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::set<Symbol> symbols() const;
    std::set<Colour> palette() const;
    // palette without colour 0
    std::set<Colour> palette_star() const;
    std::vector<Colour> colour_word() const;

    friend bool operator==(const ColouredPermutation &, const ColouredPermutation &) = default;
    // Length first, then entrywise colour order.
    friend std::strong_ordering operator<=>(const ColouredPermutation &a, const ColouredPermutation &b);

    // "2^0 1^1"; empty permutation prints as "".
    std::string to_string() const;

private:
    std::vector<ColouredInteger> entries_;
};

// A coloured subset of [n]: position -> colour.
struct ColouredDescentSet {
    std::map<std::uint32_t, Colour> elements;

    std::uint32_t len() const { return elements.empty() ? 0 : elements.rbegin()->first; }
    friend bool operator==(const ColouredDescentSet &, const ColouredDescentSet &) = default;
    friend auto operator<=>(const ColouredDescentSet &, const ColouredDescentSet &) = default;
};

struct StatTriple {
    std::uint32_t des = 0;
    std::uint64_t comaj = 0;
    // colour -> number of entries with that colour; zero counts are omitted
    std::map<Colour, std::uint32_t> col;

    friend bool operator==(const StatTriple &, const StatTriple &) = default;
    friend auto operator<=>(const StatTriple &, const StatTriple &) = default;
};

// Index of a (des, comaj, col)-equivalence class.
struct StatKey {
    std::size_t length = 0;
    StatTriple stats;

    friend bool operator==(const StatKey &, const StatKey &) = default;
    friend auto operator<=>(const StatKey &, const StatKey &) = default;
};

// Des(a) as a sorted list; contains 0 iff the first entry is coloured.
std::vector<std::uint32_t> descent_set(const ColouredPermutation &a);
StatTriple stat_triple(const ColouredPermutation &a);
ColouredDescentSet s_des(const ColouredPermutation &a);
StatKey canonical_statistics_class(const ColouredPermutation &a);

// Recover the colour word and Des from a coloured descent set.
std::vector<Colour> colour_word(const ColouredDescentSet &s);
std::vector<std::uint32_t> descent_set(const ColouredDescentSet &s);

// All interleavings of a and b, ordered lexicographically by the set of
// positions taken by the entries of a. Throws SymbolOverlap.
std::vector<ColouredPermutation> shuffles(const ColouredPermutation &a, const ColouredPermutation &b);

// Relabel symbols order-preservingly onto {1, ..., n}.
ColouredPermutation standardize(const ColouredPermutation &a);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace colhad
