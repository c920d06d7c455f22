#include "nakayama/check.hpp"

#include "nakayama/errors.hpp"

namespace nakayama {

CheckResult& CheckReport::slot(std::string_view name) {
    for (auto& r : results_)
        if (r.name == name) return r;
    results_.push_back(CheckResult{std::string(name), true, {}, 0});
    return results_.back();
}

void CheckReport::expect(std::string_view name, bool condition, const std::string& witness) {
    CheckResult& r = slot(name);
    ++r.instances;
    if (!condition && r.passed) {
        r.passed = false;
        r.witness = witness;
    }
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& o : other.results_) {
        CheckResult& r = slot(o.name);
        r.instances += o.instances;
        if (!o.passed && r.passed) {
            r.passed = false;
            r.witness = o.witness;
        }
    }
}

bool CheckReport::ok() const {
    for (const auto& r : results_)
        if (!r.passed) return false;
    return true;
}

std::vector<CheckResult> CheckReport::failures() const {
    std::vector<CheckResult> out;
    for (const auto& r : results_)
        if (!r.passed) out.push_back(r);
    return out;
}

void CheckReport::raise_if_failed() const {
    for (const auto& r : results_)
        if (!r.passed) throw Contradiction(r.name, r.witness);
}

}  // namespace nakayama
