#pragma once

#include <string>
#include <vector>

namespace qjet {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // concrete failing input / residual, empty on pass
};

struct CheckReport {
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    void add(std::string name, bool passed, std::string witness = "") {
        results.push_back({std::move(name), passed, std::move(witness)});
    }
    void merge(const CheckReport& o) {
        results.insert(results.end(), o.results.begin(), o.results.end());
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& r : results)
            if (r.name == name) return &r;
        return nullptr;
    }
};

}  // namespace qjet
