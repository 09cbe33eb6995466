#include "colhad/configuration.hpp"

#include <algorithm>

#include "colhad/error.hpp"

namespace colhad {

Label::Label(std::initializer_list<std::pair<Colour, SignedMonomial>> values)
{
    for (const auto &[c, v] : values) {
        set(c, v);
    }
}

void Label::set(Colour c, SignedMonomial value)
{
    if (value.sign != 1 && value.sign != -1) {
        throw InvalidLabel("label sign must be +1 or -1");
    }
    if (value.is_one()) {
        values_.erase(c);
        return;
    }
    if (c == 0) {
        throw InvalidLabel("colour 0 must be labelled +X^0");
    }
    values_[c] = value;
}

SignedMonomial Label::operator()(Colour c) const
{
    auto it = values_.find(c);
    return it == values_.end() ? SignedMonomial::one() : it->second;
}

std::set<Colour> Label::support() const
{
    std::set<Colour> out;
    for (const auto &[c, v] : values_) {
        out.insert(c);
    }
    return out;
}

ColouredConfiguration::ColouredConfiguration(std::initializer_list<ColouredPermutation> perms)
{
    for (const auto &a : perms) {
        add(a);
    }
}

ColouredConfiguration ColouredConfiguration::unit()
{
    ColouredConfiguration f;
    f.add(ColouredPermutation{});
    return f;
}

void ColouredConfiguration::add(const ColouredPermutation &a, std::uint64_t multiplicity)
{
    if (multiplicity > 0) {
        terms_[a] += multiplicity;
    }
}

std::uint64_t ColouredConfiguration::multiplicity(const ColouredPermutation &a) const
{
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t ColouredConfiguration::total_multiplicity() const
{
    std::uint64_t total = 0;
    for (const auto &[a, m] : terms_) {
        total += m;
    }
    return total;
}

std::size_t ColouredConfiguration::max_length() const
{
    // terms are ordered by length first
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::set<Symbol> ColouredConfiguration::symbols() const
{
    std::set<Symbol> out;
    for (const auto &[a, m] : terms_) {
        for (const auto &e : a) {
            out.insert(e.symbol);
        }
    }
    return out;
}

std::set<Colour> ColouredConfiguration::palette_star() const
{
    std::set<Colour> out;
    for (const auto &[a, m] : terms_) {
        for (const auto &e : a) {
            if (e.colour != 0) {
                out.insert(e.colour);
            }
        }
    }
    return out;
}

LabelledConfiguration::LabelledConfiguration(ColouredConfiguration config, Label label)
    : config_(std::move(config)), label_(std::move(label))
{
    const auto palette = config_.palette_star();
    for (Colour c : label_.support()) {
        if (!palette.contains(c)) {
            throw InvalidLabel("label support colour " + std::to_string(c) + " is not used by the configuration");
        }
    }
}

SignedMonomial evaluate_label(const Label &label, const ColouredPermutation &a)
{
    SignedMonomial v;
    for (const auto &e : a) {
        v = v * label(e.colour);
    }
    return v;
}

namespace {

template <typename T>
bool intersects(const std::set<T> &a, const std::set<T> &b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

} // namespace

bool are_disjoint(const ColouredConfiguration &f, const ColouredConfiguration &g)
{
    return !intersects(f.symbols(), g.symbols());
}

bool are_strongly_disjoint(const ColouredConfiguration &f, const ColouredConfiguration &g)
{
    return are_disjoint(f, g) && !intersects(f.palette_star(), g.palette_star());
}

ColouredConfiguration config_shuffle(const ColouredConfiguration &f, const ColouredConfiguration &g)
{
    if (!are_disjoint(f, g)) {
        throw SymbolOverlap("configurations share symbols");
    }
    ColouredConfiguration out;
    for (const auto &[a, ma] : f.terms()) {
        for (const auto &[b, mb] : g.terms()) {
            for (const auto &c : shuffles(a, b)) {
                out.add(c, ma * mb);
            }
        }
    }
    return out;
}

LabelledConfiguration relabel(const LabelledConfiguration &lc, const std::map<Symbol, Symbol> &symbol_map,
                              const std::map<Colour, Colour> &colour_map)
{
    auto map_colour = [&](Colour c) { return c == 0 ? Colour{0} : colour_map.at(c); };
    ColouredConfiguration config;
    for (const auto &[a, m] : lc.config().terms()) {
        std::vector<ColouredInteger> entries;
        entries.reserve(a.size());
        for (const auto &e : a) {
            entries.push_back({symbol_map.at(e.symbol), map_colour(e.colour)});
        }
        config.add(ColouredPermutation(std::move(entries)), m);
    }
    Label label;
    for (const auto &[c, v] : lc.label().values()) {
        label.set(map_colour(c), v);
    }
    return {std::move(config), std::move(label)};
}

LabelledConfiguration canonicalize(const LabelledConfiguration &lc)
{
    std::map<Symbol, Symbol> symbol_map;
    Symbol next_symbol = 1;
    for (Symbol s : lc.config().symbols()) {
        symbol_map[s] = next_symbol++;
    }
    std::map<Colour, Colour> colour_map;
    Colour next_colour = 1;
    for (Colour c : lc.config().palette_star()) {
        colour_map[c] = next_colour++;
    }
    return relabel(lc, symbol_map, colour_map);
}

LabelledConfiguration make_strongly_disjoint(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs)
{
    if (are_strongly_disjoint(lhs.config(), rhs.config())) {
        return rhs;
    }
    const auto lhs_symbols = lhs.config().symbols();
    const auto lhs_colours = lhs.config().palette_star();
    const Symbol symbol_shift = lhs_symbols.empty() ? 0 : *lhs_symbols.rbegin();
    const Colour colour_shift = lhs_colours.empty() ? 0 : *lhs_colours.rbegin();
    std::map<Symbol, Symbol> symbol_map;
    for (Symbol s : rhs.config().symbols()) {
        symbol_map[s] = s + symbol_shift;
    }
    std::map<Colour, Colour> colour_map;
    for (Colour c : rhs.config().palette_star()) {
        colour_map[c] = c + colour_shift;
    }
    return relabel(rhs, symbol_map, colour_map);
}

bool check_coherence(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs)
{
    if (!are_disjoint(lhs.config(), rhs.config())) {
        return false;
    }
    const auto rhs_colours = rhs.config().palette_star();
    for (Colour c : lhs.config().palette_star()) {
        if (rhs_colours.contains(c) && lhs.label()(c) != rhs.label()(c)) {
            return false;
        }
    }
    return true;
}

Label merge_labels(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs)
{
    if (!check_coherence(lhs, rhs)) {
        throw NotCoherent("labelled configurations are not coherent");
    }
    // Off palette*(f) the label alpha is trivial (and likewise beta), so the
    // case split reduces to overlaying the two supports.
    Label merged = lhs.label();
    for (const auto &[c, v] : rhs.label().values()) {
        merged.set(c, v);
    }
    return merged;
}

} // namespace colhad
