#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // first failing instance, empty on success
    long instances = 0;
};

// Named checks accumulated while running a battery on one algebra. Each name
// is reported once; its first failure is kept as the witness.
class CheckReport {
public:
    void expect(std::string_view name, bool condition, const std::string& witness = {});

    // Same as expect() but builds the witness text only on failure.
    template <class F>
    void expect_lazy(std::string_view name, bool condition, F&& witness) {
        if (condition)
            expect(name, true);
        else
            expect(name, false, witness());
    }
    void merge(const CheckReport& other);
    bool ok() const;
    const std::vector<CheckResult>& results() const { return results_; }
    std::vector<CheckResult> failures() const;
    // Throws Contradiction on the first failure.
    void raise_if_failed() const;

private:
    CheckResult& slot(std::string_view name);
    std::vector<CheckResult> results_;
};

}  // namespace nakayama
