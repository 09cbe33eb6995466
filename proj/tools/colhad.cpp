#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "colhad/error.hpp"
#include "colhad/io.hpp"
#include "colhad/shuffle_algebra.hpp"
#include "colhad/verify.hpp"
#include "colhad/zeta_catalog.hpp"

using namespace colhad;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string &path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw BadParameters("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string latex_shift(const SignedMonomial &m)
{
    if (m.exponent == 0) {
        return m.sign < 0 ? "-Y" : "Y";
    }
    return std::string(m.sign < 0 ? "-" : "") + "X^{" + std::to_string(m.exponent) + "} Y";
}

void print_rational(const RationalGF &w, const std::string &format, const std::string &name)
{
    if (format == "json") {
        std::cout << to_json(w).dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << name << " = " << to_latex(w) << "\n";
    } else {
        std::cout << name << " = " << to_text(w) << "\n";
    }
}

// "mat:2,1" or "mat:2:1"
std::pair<Family, std::vector<std::int64_t>> parse_family_spec(const std::string &spec)
{
    const auto colon = spec.find(':');
    const Family family = parse_family(spec.substr(0, colon));
    std::vector<std::int64_t> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        for (char &c : rest) {
            if (c == ',' || c == ':') {
                c = ' ';
            }
        }
        std::istringstream in(rest);
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t used = 0;
                params.push_back(std::stoll(tok, &used));
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
            } catch (const std::logic_error &) {
                throw ParseError("bad parameter '" + tok + "' in '" + spec + "'", colon + 1);
            }
        }
    }
    return {family, params};
}

json zeta_json(const RationalGF &w, const SignedMonomial &shift, const std::vector<std::string> &conditions)
{
    auto j = to_json(w);
    j["shift"] = {{"sign", shift.sign}, {"exponent", shift.exponent}};
    j["conditions"] = conditions;
    j["latex"] = to_latex(w);
    return j;
}

void print_zeta(const std::string &title, const RationalGF &w, const SignedMonomial &shift,
                const std::vector<std::string> &conditions, const std::string &format, json extra)
{
    if (format == "json") {
        auto j = zeta_json(w, shift, conditions);
        j.update(extra);
        std::cout << j.dump(2) << "\n";
        return;
    }
    const bool latex = format == "latex";
    std::cout << title << "\n";
    std::cout << "W(X, Y) = " << (latex ? to_latex(w) : to_text(w)) << "\n";
    std::string scaled = latex ? latex_shift(shift) : format_signed_monomial(shift) + "*Y";
    if (!latex && shift.exponent == 0) {
        scaled = shift.sign < 0 ? "-Y" : "Y";
    }
    std::cout << "zeta(Y) = W(X, " << scaled << ")\n";
    for (const auto &c : conditions) {
        std::cout << "condition: " << c << "\n";
    }
}

int report_suite(const SuiteReport &report, const std::string &format)
{
    if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.cases
                  << " cases, " << report.failures.size() << " failures)\n";
        for (const auto &f : report.failures) {
            std::cout << "  " << f.key << ": " << f.detail << "\n";
        }
    }
    return report.passed() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hadamard products of coloured-permutation generating functions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "latex", "text"}))
        ->capture_default_str();

    int status = exit_ok;

    auto *stats = app.add_subcommand("stats", "Descent statistics of a coloured permutation");
    std::string perm_text;
    stats->add_option("perm", perm_text, "e.g. \"1^1 2^2\"")->required();
    stats->callback([&] {
        const auto a = parse_permutation(perm_text);
        const auto st = stat_triple(a);
        json j = to_json(st);
        j["length"] = a.size();
        j["Des"] = descent_set(a);
        j["sDes"] = to_json(s_des(a));
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "perm:  " << a.to_string() << "\n"
                  << "des:   " << st.des << "\n"
                  << "comaj: " << st.comaj << "\n"
                  << "col:   " << j["col"].dump() << "\n"
                  << "Des:   " << j["Des"].dump() << "\n"
                  << "sDes:  " << j["sDes"].dump() << "\n";
    });

    auto *shuffle = app.add_subcommand("shuffle", "All shuffles of two symbol-disjoint permutations");
    std::string left_perm, right_perm;
    shuffle->add_option("a", left_perm)->required();
    shuffle->add_option("b", right_perm)->required();
    shuffle->callback([&] {
        const auto result = shuffles(parse_permutation(left_perm), parse_permutation(right_perm));
        if (format == "json") {
            json j = json::array();
            for (const auto &c : result) {
                j.push_back(to_json(c));
            }
            std::cout << j.dump(2) << "\n";
            return;
        }
        for (const auto &c : result) {
            std::cout << c.to_string() << "\n";
        }
    });

    auto *w_cmd = app.add_subcommand("w", "W of a labelled configuration file");
    std::string w_file;
    std::int64_t w_eps = 1;
    std::size_t w_series = 0;
    w_cmd->add_option("file", w_file, "Configuration file ('-' for stdin)")->required();
    w_cmd->add_option("--eps", w_eps)->capture_default_str();
    w_cmd->add_option("--series", w_series, "Also print the Y-expansion to this order");
    w_cmd->callback([&] {
        const auto lc = parse_labelled(read_file(w_file));
        const auto w = w_of(lc, w_eps);
        if (format == "json") {
            json j = {{"w", to_json(w)}};
            if (w_series > 0) {
                j["series"] = to_json(expand(w, w_series));
            }
            std::cout << j.dump(2) << "\n";
            return;
        }
        print_rational(w, format, "W");
        if (w_series > 0) {
            const auto s = expand(w, w_series);
            for (std::size_t k = 0; k <= s.order(); ++k) {
                std::cout << "[Y^" << k << "] " << s[k].to_string() << "\n";
            }
        }
    });

    auto *hadamard = app.add_subcommand("hadamard", "Hadamard product of two labelled configurations");
    std::string left_file, right_file;
    std::int64_t eps = 1;
    std::size_t verify_order = 0;
    bool assume_coherent = false;
    hadamard->add_option("left", left_file)->required();
    hadamard->add_option("right", right_file)->required();
    hadamard->add_option("--eps", eps)->capture_default_str();
    hadamard->add_option("--verify", verify_order, "Compare with the series oracle to this Y-order");
    hadamard->add_flag("--assume-coherent", assume_coherent, "Use the inputs as given (no relabelling)");
    hadamard->callback([&] {
        const auto lhs = parse_labelled(read_file(left_file));
        auto rhs = parse_labelled(read_file(right_file));
        if (!assume_coherent) {
            rhs = make_strongly_disjoint(lhs, rhs);
        }
        const auto result = hadamard_via_theorem(lhs, rhs, eps);
        std::optional<bool> verified;
        if (verify_order > 0) {
            verified = theorem_matches_oracle(lhs, rhs, eps, verify_order);
            if (!*verified) {
                status = exit_failed;
            }
        }
        if (format == "json") {
            json j = {{"product", to_json(result.product)}, {"w", to_json(result.w)}, {"eps", eps}};
            if (verified) {
                j["verify"] = {{"order", verify_order}, {"passed", *verified}};
            }
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << format_labelled_text(result.product);
        print_rational(result.w, format, "W");
        if (verified) {
            std::cout << "verify (order " << verify_order << "): " << (*verified ? "PASS" : "FAIL") << "\n";
        }
    });

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    SuiteOptions options;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--order", options.order)->capture_default_str();
    verify->add_option("--trials", options.trials)->capture_default_str();
    verify->add_option("--max-len", options.max_len, "0 for the suite default");
    verify->add_option("--t-order", options.t_order)->capture_default_str();
    verify->add_option("--max-n", options.max_n)->capture_default_str();
    verify->add_option("--max-d", options.max_d)->capture_default_str();
    verify->add_option("--seed", options.seed)->capture_default_str();
    verify->callback([&] { status = report_suite(run_suite(suite, options), format); });

    auto *zeta = app.add_subcommand("zeta", "Zeta functions from the catalog");
    zeta->require_subcommand(1);

    auto *zeta_build = zeta->add_subcommand("build", "One catalog entry");
    std::string family_text;
    std::vector<std::int64_t> params;
    zeta_build->add_option("family", family_text)->required();
    zeta_build->add_option("params", params)->required();
    zeta_build->callback([&] {
        const auto entry = build_entry(parse_family(family_text), params);
        print_zeta(entry.zeta_name, entry.table_form, entry.shift, entry.conditions, format,
                   {{"family", family_name(entry.family)},
                    {"params", entry.params},
                    {"eps", entry.eps},
                    {"configuration", to_json(entry.config)},
                    {"zeta", to_json(entry.closed_form)}});
    });

    auto *zeta_hadamard = zeta->add_subcommand("hadamard", "Zeta function of a product, e.g. mat:2,1 mat:3,2");
    std::vector<std::string> specs;
    zeta_hadamard->add_option("factors", specs)->required();
    zeta_hadamard->callback([&] {
        std::vector<std::pair<Family, std::vector<std::int64_t>>> factors;
        for (const auto &s : specs) {
            factors.push_back(parse_family_spec(s));
        }
        const Family first = factors.front().first;
        const bool uniform = std::all_of(factors.begin(), factors.end(), [&](const auto &f) { return f.first == first; });
        auto single_params = [&] {
            std::vector<std::int64_t> v;
            for (const auto &[fam, p] : factors) {
                if (p.size() != 1) {
                    throw BadParameters(family_name(fam) + " takes one parameter");
                }
                v.push_back(p[0]);
            }
            return v;
        };
        std::optional<ZetaProduct> product;
        if (uniform && first == Family::mat) {
            std::vector<std::pair<std::int64_t, std::int64_t>> dims;
            for (const auto &[fam, p] : factors) {
                if (p.size() != 2) {
                    throw BadParameters("mat takes two parameters");
                }
                dims.emplace_back(p[0], p[1]);
            }
            product = hadamard_mde(dims);
        } else if (uniform && first == Family::f2d_cc) {
            product = hadamard_f2d(single_params());
        } else if (uniform && first == Family::unitriangular_oc) {
            product = hadamard_ud(single_params());
        }
        if (product) {
            print_zeta("product of " + std::to_string(factors.size()) + " factors", product->w, product->shift,
                       product->conditions, format,
                       {{"eps", product->eps}, {"permutation_count", product->permutation_count}});
            return;
        }
        auto entry = build_entry(factors[0].first, factors[0].second);
        LabelledConfiguration acc = entry.config;
        RationalGF w = entry.table_form;
        SignedMonomial shift = entry.shift;
        std::vector<std::string> conditions = entry.conditions;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            const auto next = build_entry(factors[i].first, factors[i].second);
            if (next.eps != entry.eps) {
                throw BadParameters("factors use different eps (" + std::to_string(entry.eps) + " and " +
                                    std::to_string(next.eps) + ")");
            }
            const auto r = hadamard_general_product(acc, next.config, entry.eps);
            acc = r.product;
            w = r.w;
            shift = shift * next.shift;
            for (const auto &c : next.conditions) {
                if (std::find(conditions.begin(), conditions.end(), c) == conditions.end()) {
                    conditions.push_back(c);
                }
            }
        }
        print_zeta("product of " + std::to_string(factors.size()) + " factors", w, shift, conditions, format,
                   {{"eps", entry.eps}});
    });

    auto *zeta_verify = zeta->add_subcommand("verify", "Check every catalog identity");
    SuiteOptions zeta_options;
    zeta_verify->add_option("--max-n", zeta_options.max_n)->capture_default_str();
    zeta_verify->add_option("--max-d", zeta_options.max_d)->capture_default_str();
    zeta_verify->callback([&] { status = report_suite(verify_catalog(zeta_options), format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return status;
}
