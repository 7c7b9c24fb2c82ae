#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

struct SuiteResult {
    std::string suite;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;  // first counterexamples, human-readable

    std::string to_json() const;
};

struct VerifyOptions {
    std::uint64_t seed = 0xD0317AB1E;  // fixed default; CLI --seed overrides
    int max_n = -1;                    // -1 = suite default
    int trials = -1;
};

/// Seeded Erdos-Renyi-style graph: n uniform in [min_n, max_n], each edge
/// kept with probability 1/2.  Deterministic for a given engine state.
Graph random_graph(std::mt19937_64& rng, int min_n, int max_n);

// One suite per acceptance criterion.
SuiteResult verify_table1();
SuiteResult verify_krks();
SuiteResult verify_strong_compose(const VerifyOptions& opt = {});
SuiteResult verify_gk2(const VerifyOptions& opt = {});
SuiteResult verify_path_cycle(const VerifyOptions& opt = {});
SuiteResult verify_mtable();
SuiteResult verify_lemma41(const VerifyOptions& opt = {});
SuiteResult verify_pz(const VerifyOptions& opt = {});
SuiteResult verify_central_binomial();
SuiteResult verify_gamma_ladder();
SuiteResult verify_mining();
SuiteResult verify_reduction(const VerifyOptions& opt = {});

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace dompoly
