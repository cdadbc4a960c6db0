#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circparikh {

/// Per-suite bounds; unset values fall back to the suite's default.
struct SuiteLimits {
    /// Longest word enumerated (binary suites default to 12, weak-ratio to 6, the rest to 8).
    std::optional<std::size_t> max_length;
    /// Largest |x| + |y| for the swap-rule suites (default 5).
    std::optional<std::size_t> max_split;
    /// Largest exponent for the power suite (default 4).
    std::optional<unsigned long> max_power;
    /// Witnesses kept per suite; all failures are still counted.
    std::size_t failure_cap = 10;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failure_count == 0; }
    /// "PASS binary-closed-form: 8190 instances, 0 failures (123 ms)"
    std::string summary() const;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs one exhaustive check. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteLimits& limits = {});

}  // namespace circparikh
