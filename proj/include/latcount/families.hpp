#pragma once

#include <cstdint>

#include "latcount/exact.hpp"

namespace latcount {

/// C(2n, n) / (n + 1) for n >= 1. The division is exact.
BigInt catalan(std::int64_t n);

/// C(kn, n) / ((k-1)n + 1) for n >= 1, k >= 2. The division is exact;
/// fuss_catalan(n, 2) == catalan(n).
BigInt fuss_catalan(std::int64_t n, std::int64_t k);

/// (m - n + 1) / (m + 1) * C(m + n, n) for m >= n >= 1: ballot sequences
/// where one candidate stays weakly ahead.
BigInt ballot(std::int64_t m, std::int64_t n);

/// (m + 1 - kn) / (m + 1) * C(m + n, n) for k >= 1, n >= 1, m + 1 > kn.
/// generalized_ballot(m, n, 1) == ballot(m, n).
BigInt generalized_ballot(std::int64_t m, std::int64_t n, std::int64_t k);

} // namespace latcount
