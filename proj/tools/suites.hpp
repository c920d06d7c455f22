#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"

namespace nakayama::tools {

struct VerifyOptions {
    int simples_max = 5;
    int len_max = 7;
    bool cyclic = true;
    bool linear = true;
    std::vector<std::string> suites{"all"};
    int jobs = 1;
    std::optional<std::uint64_t> seed;  // enables random sampling past the exhaustive range
    int samples = 0;
    std::string pattern;  // restricts witness-search
};

struct Counterexample {
    std::string suite;
    std::string algebra;
    std::string check;
    std::string witness;
};

struct Witness {
    std::string pattern;
    bool found = false;
    std::string algebra;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    long algebras = 0;
    long checks = 0;
    long failures = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Witness> witnesses;
};

// Checker suites run per algebra, then the witness searches.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one named per-algebra battery.
CheckReport run_suite_on(const std::string& suite, const Algebra& a);

// Algebras of the sweep in canonical order: cyclic series first, then linear,
// each by increasing n.
std::vector<Algebra> sweep_space(const VerifyOptions& opt);

std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

// Pattern ids: pd-pairs, component-sizes, same-psi-quiver, reflexive-chain, fixed-points; empty runs all.
std::vector<Witness> witness_search(const std::string& pattern, int simples_max, int len_max);

// Text of a reproducible case file for a counterexample.
std::string case_file(const Counterexample& c);

}  // namespace nakayama::tools
