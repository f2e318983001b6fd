#pragma once

// Structured results for identity checks: every verifier returns a
// CheckReport listing each identity it tested, and on failure a concrete
// witness (the basis elements / field elements where the identity broke).

#include <cstdint>
#include <string>
#include <vector>

namespace postlie {

struct CheckItem {
    std::string name;     // which identity was tested
    bool passed = false;
    std::string witness;  // human-readable counterexample, empty when passed
};

struct CheckReport {
    std::vector<CheckItem> items;
    std::uint64_t seed = 0;  // RNG seed used for sampled checks, 0 if exhaustive

    bool passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }

    void add_pass(std::string name) { items.push_back({std::move(name), true, {}}); }
    void add_fail(std::string name, std::string witness) {
        items.push_back({std::move(name), false, std::move(witness)});
    }
    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    std::string summary() const;
};

}  // namespace postlie
