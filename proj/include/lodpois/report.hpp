#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lodpois {

// One violated identity: which instance, and both sides rendered canonically.
struct Failure {
    std::string witness;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string suite;
    std::size_t checked = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    void record(std::string witness, std::string lhs, std::string rhs) {
        failures.push_back({std::move(witness), std::move(lhs), std::move(rhs)});
    }

    // Count one checked instance; returns false once enough failures piled up
    // that collecting more witnesses stops being useful.
    static constexpr std::size_t kMaxFailures = 32;
    bool full() const { return failures.size() >= kMaxFailures; }

    void merge(const CheckReport& other) {
        checked += other.checked;
        for (const auto& f : other.failures)
            if (!full()) failures.push_back(f);
    }
};

} // namespace lodpois
