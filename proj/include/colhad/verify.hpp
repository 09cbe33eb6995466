#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "colhad/configuration.hpp"
#include "colhad/io.hpp"

namespace colhad {

struct SuiteOptions {
    std::size_t order = 10;   // theorem: Y-order of the series comparison
    std::size_t trials = 200; // theorem: random pairs; compat: extra random pairs
    std::size_t max_len = 0;  // 0 picks the suite default
    std::size_t t_order = 8;  // psi
    std::int64_t max_n = 4;   // catalog: n-type parameters
    std::int64_t max_d = 5;   // catalog: d/e-type parameters
    std::uint64_t seed = 1;
};

struct SuiteFailure {
    std::string key;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<SuiteFailure> failures;
    json details = json::object();

    bool passed() const { return failures.empty(); }
    json to_json() const;
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"theorem", "qsym", "psi", "compat", "catalog"};
    return names;
}

// Throws UnknownSuite.
SuiteReport run_suite(const std::string &name, const SuiteOptions &options);

SuiteReport verify_theorem(const SuiteOptions &options);
SuiteReport verify_qsym(const SuiteOptions &options);
SuiteReport verify_psi(const SuiteOptions &options);
SuiteReport verify_compat(const SuiteOptions &options);
SuiteReport verify_catalog(const SuiteOptions &options);

// A random coherent pair: at most 3 permutations per side, lengths at most 3,
// colours below 4, label exponents in [-3, 3], symbols split between sides.
std::pair<LabelledConfiguration, LabelledConfiguration> random_coherent_pair(std::mt19937_64 &rng);

// W_f *_Y W_g against the theorem's closed form, both expanded to `order`.
bool theorem_matches_oracle(const LabelledConfiguration &lhs, const LabelledConfiguration &rhs, std::int64_t eps,
                            std::size_t order);

} // namespace colhad
