#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace latcount {

/// Ranges for the self-verification sweep. Every (m, n, u, k) with
/// 0 <= u <= u_max, 2 <= k <= k_max, 2 <= n <= n_max and
/// min_m <= m <= min_m + m_extra is visited. Exhaustive enumeration joins
/// the cross-check only while m + n <= brute_cap.
struct SweepOptions {
    std::int64_t u_max = 4;
    std::int64_t k_max = 4;
    std::int64_t n_max = 6;
    std::int64_t m_extra = 5;
    std::int64_t brute_cap = 16;
    /// Corrupts the alternating-sum signs; exists so tests can prove the
    /// sweep actually detects a broken method.
    bool flip_sum_sign = false;
};

struct SweepMismatch {
    std::string instance;
    std::string check;
    /// Label/value pairs describing what was compared.
    std::vector<std::pair<std::string, std::string>> values;
    /// Methods voted against the majority value (agreement checks only).
    std::vector<std::string> disagreeing;
};

struct SweepReport {
    SweepOptions options;
    std::int64_t instances_checked = 0;
    /// Check name to number of times it ran.
    std::map<std::string, std::int64_t> checks_run;
    std::vector<SweepMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Runs every structural identity and cross-method comparison over the
/// requested ranges and reports what ran and what disagreed.
SweepReport run_verification_sweep(const SweepOptions& opts = {});

} // namespace latcount
