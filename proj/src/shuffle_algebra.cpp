#include "colhad/shuffle_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "colhad/error.hpp"

namespace colhad {

HadamardResult hadamard_via_theorem(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs,
                                    std::int64_t eps)
{
    Label merged = merge_labels(lhs, rhs);
    auto shuffled = config_shuffle(lhs.config(), rhs.config());
    if (shuffled.empty()) {
        merged = Label{};
    }
    LabelledConfiguration product(std::move(shuffled), std::move(merged));
    auto w = w_of(product, eps);
    return {std::move(product), std::move(w)};
}

HadamardResult hadamard_general_product(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs,
                                        std::int64_t eps)
{
    return hadamard_via_theorem(lhs, make_strongly_disjoint(lhs, rhs), eps);
}

RationalGF hadamard_general(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs, std::int64_t eps)
{
    return hadamard_general_product(lhs, rhs, eps).w;
}

namespace statistics {

namespace {

StatValue triple_of(std::span<const ColouredInteger> w)
{
    const auto n = static_cast<std::int64_t>(w.size());
    std::int64_t des = 0;
    std::int64_t comaj = 0;
    if (!w.empty() && w[0].colour != 0) {
        des = 1;
        comaj = n;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            ++des;
            comaj += n - static_cast<std::int64_t>(i + 1);
        }
    }
    std::map<Colour, std::int64_t> col;
    for (const auto &e : w) {
        ++col[e.colour];
    }
    StatValue v{des, comaj};
    for (const auto &[c, k] : col) {
        v.push_back(c);
        v.push_back(k);
    }
    return v;
}

StatValue sdes_of(std::span<const ColouredInteger> w)
{
    StatValue v;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].colour != w[i + 1].colour || w[i].symbol > w[i + 1].symbol) {
            v.push_back(static_cast<std::int64_t>(i + 1));
            v.push_back(w[i].colour);
        }
    }
    if (!w.empty()) {
        v.push_back(static_cast<std::int64_t>(w.size()));
        v.push_back(w.back().colour);
    }
    return v;
}

} // namespace

NamedStatistic des_comaj_col()
{
    return {"des_comaj_col", triple_of};
}

NamedStatistic s_des()
{
    return {"sdes", sdes_of};
}

NamedStatistic first_symbol()
{
    return {"first_symbol", [](std::span<const ColouredInteger> w) {
                return w.empty() ? StatValue{} : StatValue{static_cast<std::int64_t>(w[0].symbol)};
            }};
}

NamedStatistic max_position()
{
    return {"max_position", [](std::span<const ColouredInteger> w) {
                if (w.empty()) {
                    return StatValue{};
                }
                auto it = std::max_element(w.begin(), w.end());
                return StatValue{static_cast<std::int64_t>(it - w.begin()) + 1};
            }};
}

std::optional<NamedStatistic> by_name(const std::string &name)
{
    for (auto make : {des_comaj_col, s_des, first_symbol, max_position}) {
        auto stat = make();
        if (stat.name == name) {
            return stat;
        }
    }
    return std::nullopt;
}

} // namespace statistics

std::vector<ColouredPermutation> all_coloured_permutations(std::size_t n, Colour colours)
{
    std::vector<ColouredPermutation> out;
    std::vector<Symbol> perm(n);
    std::iota(perm.begin(), perm.end(), Symbol{1});
    do {
        std::vector<Colour> word(n, 0);
        while (true) {
            std::vector<ColouredInteger> entries(n);
            for (std::size_t i = 0; i < n; ++i) {
                entries[i] = {perm[i], word[i]};
            }
            out.push_back(ColouredPermutation::unchecked(std::move(entries)));
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++word[i] < colours) {
                    break;
                }
                word[i] = 0;
            }
            if (i == n) {
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

// Pattern `p` (symbols 1..n) realised on the sorted symbol list `symbols`.
std::vector<ColouredInteger> realise(const ColouredPermutation &p, const std::vector<Symbol> &symbols)
{
    std::vector<ColouredInteger> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = {symbols[p[i].symbol - 1], p[i].colour};
    }
    return out;
}

// Sorted multiset of stat values over all shuffles of a and b.
std::vector<StatValue> shuffle_multiset(const NamedStatistic &stat, const std::vector<ColouredInteger> &a,
                                        const std::vector<ColouredInteger> &b)
{
    const std::size_t n = a.size() + b.size();
    std::vector<StatValue> values;
    std::vector<ColouredInteger> word(n);
    // Iterate over bitmasks choosing the positions of a.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
    do {
        std::size_t ia = 0;
        std::size_t ib = 0;
        for (std::size_t p = 0; p < n; ++p) {
            word[p] = mask[p] ? a[ia++] : b[ib++];
        }
        values.push_back(stat.evaluate(word));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(values.begin(), values.end());
    return values;
}

struct ClassRecord {
    std::vector<StatValue> multiset;
    ColouredPermutation a;
    ColouredPermutation b;
};

using PairKey = std::tuple<StatValue, StatValue, std::size_t, std::size_t>;

// Returns a counterexample if (a, b) contradicts an earlier pair of the same key.
std::optional<Counterexample> record_pair(std::map<PairKey, ClassRecord> &seen, const NamedStatistic &stat,
                                          const std::vector<ColouredInteger> &a, const std::vector<ColouredInteger> &b)
{
    PairKey key{stat.evaluate(a), stat.evaluate(b), a.size(), b.size()};
    auto multiset = shuffle_multiset(stat, a, b);
    auto it = seen.find(key);
    if (it == seen.end()) {
        seen.emplace(std::move(key), ClassRecord{std::move(multiset), ColouredPermutation::unchecked(a),
                                                 ColouredPermutation::unchecked(b)});
        return std::nullopt;
    }
    if (it->second.multiset != multiset) {
        return Counterexample{"shuffle", it->second.a, it->second.b, ColouredPermutation::unchecked(a),
                              ColouredPermutation::unchecked(b)};
    }
    return std::nullopt;
}

std::vector<ColouredInteger> spread(const ColouredPermutation &p, Symbol factor, Symbol offset)
{
    std::vector<ColouredInteger> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = {p[i].symbol * factor + offset, p[i].colour};
    }
    return out;
}

} // namespace

CompatibilityReport check_shuffle_compatibility(const NamedStatistic &stat, const CompatibilityOptions &options)
{
    CompatibilityReport report;
    report.statistic = stat.name;
    const std::size_t max_total = options.max_total_length;

    std::vector<std::vector<ColouredPermutation>> patterns(max_total + 1);
    for (std::size_t n = 0; n <= max_total; ++n) {
        patterns[n] = all_coloured_permutations(n, options.colours);
    }

    // Relabelling invariance on every pattern.
    for (std::size_t n = 1; n <= max_total; ++n) {
        for (const auto &p : patterns[n]) {
            ++report.relabel_checks;
            auto moved = spread(p, 2, 1);
            if (stat.evaluate(p.entries()) != stat.evaluate(moved)) {
                report.counterexample =
                    Counterexample{"relabelling", p, {}, ColouredPermutation::unchecked(std::move(moved)), {}};
                return report;
            }
        }
    }

    std::map<PairKey, ClassRecord> seen;
    for (std::size_t total = 0; total <= max_total; ++total) {
        for (std::size_t n = 0; n <= total; ++n) {
            const std::size_t m = total - n;
            std::vector<bool> in_a(total, false);
            std::fill(in_a.begin(), in_a.begin() + static_cast<std::ptrdiff_t>(n), true);
            do {
                std::vector<Symbol> sa;
                std::vector<Symbol> sb;
                for (std::size_t s = 0; s < total; ++s) {
                    (in_a[s] ? sa : sb).push_back(static_cast<Symbol>(s + 1));
                }
                for (const auto &pa : patterns[n]) {
                    const auto a = realise(pa, sa);
                    for (const auto &pb : patterns[m]) {
                        ++report.exhaustive_pairs;
                        if (auto ce = record_pair(seen, stat, a, realise(pb, sb))) {
                            report.counterexample = std::move(ce);
                            return report;
                        }
                    }
                }
            } while (std::prev_permutation(in_a.begin(), in_a.end()));
        }
    }

    // Random pairs: the same two patterns realised on two random
    // interleavings of their symbol sets.
    std::mt19937_64 rng(options.seed);
    const std::size_t random_max = max_total + 2;
    auto random_pattern = [&](std::size_t n) {
        std::vector<Symbol> perm(n);
        std::iota(perm.begin(), perm.end(), Symbol{1});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<ColouredInteger> entries(n);
        std::uniform_int_distribution<Colour> colour(0, options.colours - 1);
        for (std::size_t i = 0; i < n; ++i) {
            entries[i] = {perm[i], colour(rng)};
        }
        return ColouredPermutation::unchecked(std::move(entries));
    };
    auto random_split = [&](std::size_t n, std::size_t m) {
        std::vector<Symbol> pool(3 * (n + m) + 1);
        std::iota(pool.begin(), pool.end(), Symbol{1});
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Symbol> sa(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<Symbol> sb(pool.begin() + static_cast<std::ptrdiff_t>(n),
                               pool.begin() + static_cast<std::ptrdiff_t>(n + m));
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return std::pair{sa, sb};
    };
    std::uniform_int_distribution<std::size_t> total_len(0, random_max);
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const std::size_t total = total_len(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, total)(rng);
        const std::size_t m = total - n;
        const auto pa = random_pattern(n);
        const auto pb = random_pattern(m);
        auto [sa1, sb1] = random_split(n, m);
        auto [sa2, sb2] = random_split(n, m);
        const auto a1 = realise(pa, sa1);
        const auto b1 = realise(pb, sb1);
        const auto a2 = realise(pa, sa2);
        const auto b2 = realise(pb, sb2);
        ++report.random_trials;
        if (stat.evaluate(a1) != stat.evaluate(a2) || stat.evaluate(b1) != stat.evaluate(b2)) {
            report.counterexample = Counterexample{"relabelling", ColouredPermutation::unchecked(a1),
                                                   ColouredPermutation::unchecked(b1),
                                                   ColouredPermutation::unchecked(a2),
                                                   ColouredPermutation::unchecked(b2)};
            return report;
        }
        if (shuffle_multiset(stat, a1, b1) != shuffle_multiset(stat, a2, b2)) {
            report.counterexample =
                Counterexample{"shuffle", ColouredPermutation::unchecked(a1), ColouredPermutation::unchecked(b1),
                               ColouredPermutation::unchecked(a2), ColouredPermutation::unchecked(b2)};
            return report;
        }
    }
    return report;
}

PzMonomial PzMonomial::operator*(const PzMonomial &o) const
{
    PzMonomial r = *this;
    for (const auto &[c, k] : o.p) {
        r.p[c] += k;
    }
    r.z += o.z;
    return r;
}

void add_to(PxPoly &target, const PzMonomial &m, const LaurentPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = target.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            target.erase(it);
        }
    }
}

PxPoly multiply(const PxPoly &a, const PxPoly &b)
{
    PxPoly r;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            add_to(r, ma * mb, ca * cb);
        }
    }
    return r;
}

SeriesT &SeriesT::operator+=(const SeriesT &o)
{
    if (o.order() != order()) {
        throw OrderMismatch("t-series orders differ");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        for (const auto &[m, c] : o.coeffs_[k]) {
            add_to(coeffs_[k], m, c);
        }
    }
    return *this;
}

SeriesT hadamard_t(const SeriesT &a, const SeriesT &b)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("t-series orders differ");
    }
    SeriesT r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        r[k] = multiply(a[k], b[k]);
    }
    return r;
}

SeriesT HImage::expand(std::size_t order) const
{
    // Reuse the Y-expansion with X playing x and Y playing t.
    const RationalGF gf(YPolynomial::term(t_exponent, LaurentPoly::x_power(x_exponent)),
                        staircase_denominator(1, length));
    const auto series = colhad::expand(gf, order);
    SeriesT out(order);
    for (std::size_t k = 0; k <= order; ++k) {
        add_to(out[k], pz, series[k]);
    }
    return out;
}

std::string HImage::to_string() const
{
    std::ostringstream out;
    bool any = false;
    for (const auto &[c, k] : pz.p) {
        out << (any ? "*" : "") << "p" << c;
        if (k != 1) {
            out << "^" << k;
        }
        any = true;
    }
    auto factor = [&](const char *var, std::int64_t e) {
        if (e == 0) {
            return;
        }
        out << (any ? "*" : "") << var;
        if (e != 1) {
            out << "^" << e;
        }
        any = true;
    };
    factor("x", x_exponent);
    factor("t", static_cast<std::int64_t>(t_exponent));
    factor("z", pz.z);
    if (!any) {
        out << "1";
    }
    out << " / ((1-t)";
    for (std::size_t i = 1; i <= length; ++i) {
        out << "(1-x" << (i == 1 ? "" : "^" + std::to_string(i)) << "t)";
    }
    out << ")";
    return out.str();
}

HImage h_map(const StatKey &key)
{
    HImage h;
    for (const auto &[c, k] : key.stats.col) {
        h.pz.p[c] = k;
    }
    h.x_exponent = static_cast<std::int64_t>(key.stats.comaj);
    h.t_exponent = key.stats.des;
    h.length = key.length;
    return h;
}

HImage h_tilde_map(const StatKey &key)
{
    if (key.length == 0) {
        return {};
    }
    HImage h = h_map(key);
    h.t_exponent += 1;
    h.pz.z = static_cast<std::uint32_t>(key.length);
    return h;
}

SeriesT h_image_series(const ColouredConfiguration &f, std::size_t order, bool tilde)
{
    SeriesT total(order);
    for (const auto &[a, mult] : f.terms()) {
        const auto key = canonical_statistics_class(a);
        auto s = (tilde ? h_tilde_map(key) : h_map(key)).expand(order);
        for (std::size_t k = 0; k <= order; ++k) {
            for (auto &[m, c] : s[k]) {
                c = c.times(Monomial(Rational(mult), 0));
            }
        }
        total += s;
    }
    return total;
}

std::optional<std::pair<std::size_t, PxPoly>> leading_term(const SeriesT &s)
{
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (!s[k].empty()) {
            return std::pair{k, s[k]};
        }
    }
    return std::nullopt;
}

} // namespace colhad
