#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/algebra.hpp"
#include "nakayama/check.hpp"

namespace nakayama::tools {

using Json = nlohmann::ordered_json;

// Natural numbers as JSON numbers, infinity as "inf".
Json dim_json(Dim d);

struct Analysis {
    Json doc;  // keys: algebra, simples, summary, classes, ties, findings
    std::vector<CheckResult> failures;
};

// Runs every check battery; failures are listed under findings.contradictions.
Analysis analyze(const Algebra& a);

std::string format_json(const Analysis& an);
std::string format_table(const Analysis& an);

}  // namespace nakayama::tools
