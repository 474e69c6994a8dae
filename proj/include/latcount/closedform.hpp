#pragma once

#include <cstdint>

#include "latcount/exact.hpp"
#include "latcount/params.hpp"

namespace latcount {

/// Paths from (a,b) to (m,n) that stay weakly above y = kx.
/// Valid iff k >= 1, 0 <= a <= m, ka <= b <= n and n >= km.
struct AboveLineQuery {
    AboveLineQuery(std::int64_t a, std::int64_t b, std::int64_t m,
                   std::int64_t n, std::int64_t k);
    std::int64_t a, b, m, n, k;
};

/// Paths from (a,b) to (m,n) that stay weakly below y = x/k.
/// Valid iff k >= 1, 0 <= b <= n, kb <= a <= m, n >= 1 and m >= kn.
struct BelowLineQuery {
    BelowLineQuery(std::int64_t a, std::int64_t b, std::int64_t m,
                   std::int64_t n, std::int64_t k);
    std::int64_t a, b, m, n, k;
};

/// The alternating closed-form sum
///   sum_{i=0}^{floor(u/k)} (-1)^i (m-(k-1)(n-1))/(m+n-1-ki)
///                          * C(m+n-1-ki, n-1-i) * C(u-(k-1)i, i),
/// accumulated as an exact rational. The total must come out integral;
/// anything else raises IntegralityError (a transcription bug, not input).
BigInt count_by_closed_form(const QueryParams& p);

/// Closed-form count for an above-the-line query.
BigInt count_above_line(const AboveLineQuery& q);

/// Closed-form count for a below-the-line query; by the diagonal reflection
/// it equals count_above_line on the query with a<->b and m<->n swapped.
BigInt count_below_line(const BelowLineQuery& q);

namespace detail {

/// count_by_closed_form with the sign of every i >= 1 term inverted.
/// Exists solely so the verification sweep's mismatch reporter can be
/// exercised against a deliberately corrupted method.
BigInt count_by_closed_form_sign_flipped(const QueryParams& p);

} // namespace detail

} // namespace latcount
