#include "colhad/coloured_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "colhad/error.hpp"

namespace colhad {

ColouredPermutation::ColouredPermutation(std::vector<ColouredInteger> entries) : entries_(std::move(entries))
{
    std::set<Symbol> seen;
    for (const auto &e : entries_) {
        if (e.symbol == 0) {
            throw InvalidPermutation("symbols must be positive");
        }
        if (!seen.insert(e.symbol).second) {
            throw InvalidPermutation("repeated symbol " + std::to_string(e.symbol));
        }
    }
}

ColouredPermutation ColouredPermutation::uncoloured(const std::vector<Symbol> &symbols)
{
    std::vector<ColouredInteger> entries;
    entries.reserve(symbols.size());
    for (Symbol s : symbols) {
        entries.push_back({s, 0});
    }
    return ColouredPermutation(std::move(entries));
}

std::set<Symbol> ColouredPermutation::symbols() const
{
    std::set<Symbol> out;
    for (const auto &e : entries_) {
        out.insert(e.symbol);
    }
    return out;
}

std::set<Colour> ColouredPermutation::palette() const
{
    std::set<Colour> out;
    for (const auto &e : entries_) {
        out.insert(e.colour);
    }
    return out;
}

std::set<Colour> ColouredPermutation::palette_star() const
{
    auto out = palette();
    out.erase(0);
    return out;
}

std::vector<Colour> ColouredPermutation::colour_word() const
{
    std::vector<Colour> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(e.colour);
    }
    return out;
}

std::strong_ordering operator<=>(const ColouredPermutation &a, const ColouredPermutation &b)
{
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::string ColouredPermutation::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << entries_[i].symbol << '^' << entries_[i].colour;
    }
    return out.str();
}

std::vector<std::uint32_t> descent_set(const ColouredPermutation &a)
{
    std::vector<std::uint32_t> des;
    if (a.empty()) {
        return des;
    }
    if (a[0].colour != 0) {
        des.push_back(0);
    }
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] > a[i + 1]) {
            des.push_back(static_cast<std::uint32_t>(i + 1));
        }
    }
    return des;
}

StatTriple stat_triple(const ColouredPermutation &a)
{
    StatTriple st;
    const auto n = static_cast<std::uint64_t>(a.size());
    for (std::uint32_t i : descent_set(a)) {
        ++st.des;
        st.comaj += n - i;
    }
    for (const auto &e : a) {
        ++st.col[e.colour];
    }
    return st;
}

ColouredDescentSet s_des(const ColouredPermutation &a)
{
    ColouredDescentSet s;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (a[i].colour != a[i + 1].colour || a[i].symbol > a[i + 1].symbol) {
            s.elements.emplace(static_cast<std::uint32_t>(i + 1), a[i].colour);
        }
    }
    if (n > 0) {
        s.elements.emplace(static_cast<std::uint32_t>(n), a[n - 1].colour);
    }
    return s;
}

StatKey canonical_statistics_class(const ColouredPermutation &a)
{
    return {a.size(), stat_triple(a)};
}

std::vector<Colour> colour_word(const ColouredDescentSet &s)
{
    std::vector<Colour> word(s.len());
    std::uint32_t pos = 0;
    for (const auto &[i, c] : s.elements) {
        for (; pos < i; ++pos) {
            word[pos] = c;
        }
    }
    return word;
}

std::vector<std::uint32_t> descent_set(const ColouredDescentSet &s)
{
    std::vector<std::uint32_t> des;
    const auto word = colour_word(s);
    if (word.empty()) {
        return des;
    }
    if (word[0] != 0) {
        des.push_back(0);
    }
    for (const auto &[i, c] : s.elements) {
        if (i >= word.size()) {
            break;
        }
        // Between different colours the lower integer colour is the larger
        // element; between equal colours membership means a symbol descent.
        if (word[i - 1] == word[i] || word[i - 1] < word[i]) {
            des.push_back(i);
        }
    }
    return des;
}

namespace {

void interleave(const ColouredPermutation &a, const ColouredPermutation &b, std::vector<bool> &take_a,
                std::size_t pos, std::size_t used_a, std::vector<ColouredPermutation> &out)
{
    const std::size_t n = a.size() + b.size();
    if (pos == n) {
        std::vector<ColouredInteger> word;
        word.reserve(n);
        std::size_t ia = 0;
        std::size_t ib = 0;
        for (std::size_t p = 0; p < n; ++p) {
            word.push_back(take_a[p] ? a[ia++] : b[ib++]);
        }
        out.push_back(ColouredPermutation::unchecked(std::move(word)));
        return;
    }
    const std::size_t used_b = pos - used_a;
    // Taking a at this position yields the lexicographically smaller position set.
    if (used_a < a.size()) {
        take_a[pos] = true;
        interleave(a, b, take_a, pos + 1, used_a + 1, out);
    }
    if (used_b < b.size()) {
        take_a[pos] = false;
        interleave(a, b, take_a, pos + 1, used_a, out);
    }
}

} // namespace

std::vector<ColouredPermutation> shuffles(const ColouredPermutation &a, const ColouredPermutation &b)
{
    for (const auto &e : a) {
        for (const auto &f : b) {
            if (e.symbol == f.symbol) {
                throw SymbolOverlap("shared symbol " + std::to_string(e.symbol));
            }
        }
    }
    std::vector<ColouredPermutation> out;
    out.reserve(binomial(a.size() + b.size(), a.size()));
    std::vector<bool> take_a(a.size() + b.size());
    interleave(a, b, take_a, 0, 0, out);
    return out;
}

ColouredPermutation standardize(const ColouredPermutation &a)
{
    std::vector<Symbol> sorted;
    for (const auto &e : a) {
        sorted.push_back(e.symbol);
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<ColouredInteger> entries;
    entries.reserve(a.size());
    for (const auto &e : a) {
        auto rank = std::lower_bound(sorted.begin(), sorted.end(), e.symbol) - sorted.begin();
        entries.push_back({static_cast<Symbol>(rank + 1), e.colour});
    }
    return ColouredPermutation(std::move(entries));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace colhad
