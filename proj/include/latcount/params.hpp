#pragma once

#include <cstdint>

namespace latcount {

/// The validated quadruple (m, n, u, k) naming one counting instance:
/// monotone paths from (u+1, 1) to (m, n) weakly below y = (x-1)/(k-1) + 1.
///
/// Construction enforces u >= 0, k >= 2, n >= 2 and
/// m >= max{u+1, (k-1)(n-1)}; a violation throws DomainError naming the
/// offending constraint.
class QueryParams {
public:
    QueryParams(std::int64_t m, std::int64_t n, std::int64_t u, std::int64_t k);

    std::int64_t m() const { return m_; }
    std::int64_t n() const { return n_; }
    std::int64_t u() const { return u_; }
    std::int64_t k() const { return k_; }

    /// max{u+1, (k-1)(n-1)}: the smallest admissible m for this (n, u, k).
    std::int64_t min_m() const;

    /// Smallest admissible m for a given row, without constructing params.
    static std::int64_t min_m_for(std::int64_t n, std::int64_t u, std::int64_t k);

private:
    std::int64_t m_;
    std::int64_t n_;
    std::int64_t u_;
    std::int64_t k_;
};

} // namespace latcount
