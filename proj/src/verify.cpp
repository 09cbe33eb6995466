#include "colhad/verify.hpp"

#include <algorithm>
#include <set>

#include "colhad/error.hpp"
#include "colhad/qsym.hpp"
#include "colhad/shuffle_algebra.hpp"
#include "colhad/zeta_catalog.hpp"

namespace colhad {

json SuiteReport::to_json() const
{
    json f = json::array();
    for (const auto &failure : failures) {
        f.push_back({{"case", failure.key}, {"detail", failure.detail}});
    }
    return {{"suite", suite}, {"cases", cases}, {"passed", passed()}, {"failures", f}, {"details", details}};
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &options)
{
    if (name == "theorem") {
        return verify_theorem(options);
    }
    if (name == "qsym") {
        return verify_qsym(options);
    }
    if (name == "psi") {
        return verify_psi(options);
    }
    if (name == "compat") {
        return verify_compat(options);
    }
    if (name == "catalog") {
        return verify_catalog(options);
    }
    throw UnknownSuite("unknown suite '" + name + "'");
}

std::pair<LabelledConfiguration, LabelledConfiguration> random_coherent_pair(std::mt19937_64 &rng)
{
    auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    std::vector<Symbol> pool{1, 2, 3, 4, 5, 6};
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Symbol> left(pool.begin(), pool.begin() + 3);
    std::vector<Symbol> right(pool.begin() + 3, pool.end());

    std::map<Colour, SignedMonomial> shared;
    for (Colour c = 1; c <= 3; ++c) {
        shared[c] = {uniform(0, 1) == 0 ? 1 : -1, uniform(-3, 3)};
    }

    auto side = [&](std::vector<Symbol> symbols) {
        ColouredConfiguration config;
        const auto support = uniform(1, 3);
        for (std::int64_t t = 0; t < support; ++t) {
            std::shuffle(symbols.begin(), symbols.end(), rng);
            const auto len = static_cast<std::size_t>(uniform(0, 3));
            std::vector<ColouredInteger> entries;
            for (std::size_t i = 0; i < len; ++i) {
                entries.push_back({symbols[i], static_cast<Colour>(uniform(0, 3))});
            }
            config.add(ColouredPermutation(std::move(entries)), static_cast<std::uint64_t>(uniform(1, 2)));
        }
        Label label;
        for (Colour c : config.palette_star()) {
            label.set(c, shared[c]);
        }
        return LabelledConfiguration(std::move(config), std::move(label));
    };
    auto lhs = side(left);
    auto rhs = side(right);
    return {std::move(lhs), std::move(rhs)};
}

bool theorem_matches_oracle(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs, std::int64_t eps,
                            std::size_t order)
{
    const auto oracle = hadamard_series(expand(w_of(lhs, eps), order), expand(w_of(rhs, eps), order));
    const auto closed = hadamard_via_theorem(lhs, rhs, eps);
    return expand(closed.w, order) == oracle;
}

SuiteReport verify_theorem(const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = "theorem";
    std::mt19937_64 rng(options.seed);
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        auto [lhs, rhs] = random_coherent_pair(rng);
        const auto eps = std::uniform_int_distribution<std::int64_t>(-2, 2)(rng);
        ++report.cases;
        if (!theorem_matches_oracle(lhs, rhs, eps, options.order)) {
            report.failures.push_back({"trial " + std::to_string(trial),
                                       "eps " + std::to_string(eps) + "\n" + format_labelled_text(lhs) + "--\n" +
                                           format_labelled_text(rhs)});
        }
    }
    report.details = {{"order", options.order}, {"trials", options.trials}, {"seed", options.seed}};
    return report;
}

namespace {

// Every way of writing two disjoint permutations of total length la + lb on
// the symbols {1..la+lb}.
template <typename Fn>
void for_each_disjoint_pair(std::size_t la, std::size_t lb, Colour colours, Fn &&fn)
{
    const std::size_t n = la + lb;
    const auto patterns_a = all_coloured_permutations(la, colours);
    const auto patterns_b = all_coloured_permutations(lb, colours);
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(la), true);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<Symbol> sa;
        std::vector<Symbol> sb;
        for (std::size_t i = 0; i < n; ++i) {
            (mask[i] ? sa : sb).push_back(static_cast<Symbol>(i + 1));
        }
        auto realise = [](const ColouredPermutation &p, const std::vector<Symbol> &symbols) {
            std::vector<ColouredInteger> entries;
            for (const auto &e : p) {
                entries.push_back({symbols[e.symbol - 1], e.colour});
            }
            return ColouredPermutation(std::move(entries));
        };
        for (const auto &pa : patterns_a) {
            const auto a = realise(pa, sa);
            for (const auto &pb : patterns_b) {
                fn(a, realise(pb, sb));
            }
        }
    } while (std::next_permutation(mask.begin(), mask.end()));
}

} // namespace

SuiteReport verify_qsym(const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = "qsym";
    const std::size_t max_len = options.max_len == 0 ? 2 : options.max_len;
    const std::uint32_t cutoff = 4;
    for (std::size_t la = 0; la <= max_len; ++la) {
        for (std::size_t lb = 0; lb <= max_len; ++lb) {
            for_each_disjoint_pair(la, lb, 3, [&](const ColouredPermutation &a, const ColouredPermutation &b) {
                ++report.cases;
                if (!verify_product_rule(a, b, cutoff)) {
                    report.failures.push_back({"(" + a.to_string() + ") x (" + b.to_string() + ")", "product rule"});
                }
            });
        }
    }
    report.details = {{"max_len", max_len}, {"colours", 3}, {"cutoff", cutoff}};
    return report;
}

SuiteReport verify_psi(const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = "psi";
    const std::size_t max_len = options.max_len == 0 ? 4 : options.max_len;
    std::size_t permutations = 0;
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::set<StatKey> seen;
        for (const auto &a : all_coloured_permutations(n, 3)) {
            ++permutations;
            if (!seen.insert(canonical_statistics_class(a)).second) {
                continue;
            }
            ++report.cases;
            if (!psi_closed_form_check(a, options.t_order)) {
                report.failures.push_back({a.to_string(), "psi series differs from the closed form"});
            }
        }
    }
    report.details = {{"max_len", max_len}, {"t_order", options.t_order}, {"permutations", permutations}};
    return report;
}

SuiteReport verify_compat(const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = "compat";
    CompatibilityOptions copts;
    copts.max_total_length = options.max_len == 0 ? 6 : options.max_len;
    copts.colours = 3;
    copts.trials = options.trials;
    copts.seed = options.seed;
    json stats = json::array();
    auto run = [&](const NamedStatistic &stat, bool expect_compatible) {
        const auto r = check_shuffle_compatibility(stat, copts);
        ++report.cases;
        auto j = colhad::to_json(r);
        j["expected_compatible"] = expect_compatible;
        stats.push_back(j);
        if (r.compatible() != expect_compatible) {
            report.failures.push_back({stat.name, expect_compatible ? "counterexample found" : "no counterexample"});
        }
    };
    run(statistics::des_comaj_col(), true);
    run(statistics::s_des(), true);
    run(statistics::first_symbol(), false);
    run(statistics::max_position(), false);
    report.details = {{"max_total_length", copts.max_total_length}, {"colours", 3}, {"statistics", stats}};
    return report;
}

SuiteReport verify_catalog(const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = "catalog";
    json rows = json::array();
    for (Family family : all_families()) {
        std::vector<std::vector<std::int64_t>> param_sets;
        switch (family) {
        case Family::mat:
            for (std::int64_t d = 1; d <= options.max_d; ++d) {
                for (std::int64_t e = 1; e <= options.max_d; ++e) {
                    param_sets.push_back({d, e});
                }
            }
            break;
        case Family::so:
        case Family::f2d_cc:
        case Family::unitriangular_oc:
            for (std::int64_t d = 1; d <= options.max_d; ++d) {
                param_sets.push_back({d});
            }
            break;
        default:
            for (std::int64_t n = 1; n <= options.max_n; ++n) {
                param_sets.push_back({n});
            }
            break;
        }
        for (const auto &params : param_sets) {
            std::string key = family_name(family);
            for (auto p : params) {
                key += ":" + std::to_string(p);
            }
            ++report.cases;
            try {
                build_entry(family, params);
                rows.push_back(key);
            } catch (const Error &e) {
                report.failures.push_back({key, e.what()});
            }
        }
    }
    report.details = {{"max_n", options.max_n}, {"max_d", options.max_d}, {"entries", rows}};
    return report;
}

} // namespace colhad
