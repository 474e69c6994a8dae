#include "latcount/params.hpp"

#include <string>

#include "latcount/errors.hpp"
#include "latcount/exact.hpp"

namespace latcount {

QueryParams::QueryParams(std::int64_t m, std::int64_t n, std::int64_t u,
                         std::int64_t k)
    : m_(m), n_(n), u_(u), k_(k) {
    if (u < 0) {
        throw DomainError("u must be >= 0 (got " + std::to_string(u) + ")");
    }
    if (k < 2) {
        throw DomainError("k must be >= 2 (got " + std::to_string(k) + ")");
    }
    if (n < 2) {
        throw DomainError("n must be >= 2 (got " + std::to_string(n) + ")");
    }
    const std::int64_t lo = min_m_for(n, u, k);
    if (m < lo) {
        throw DomainError("m must be >= max{u+1,(k-1)(n-1)} = " +
                          std::to_string(lo) + " (got " + std::to_string(m) +
                          ")");
    }
}

std::int64_t QueryParams::min_m() const { return min_m_for(n_, u_, k_); }

std::int64_t QueryParams::min_m_for(std::int64_t n, std::int64_t u,
                                    std::int64_t k) {
    const std::int64_t band = checked::mul(k - 1, n - 1);
    return u + 1 > band ? u + 1 : band;
}

} // namespace latcount
