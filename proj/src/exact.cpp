#include "latcount/exact.hpp"

#include <string>

namespace latcount {

BigInt to_integer_exact(const BigRational& q, const char* context) {
    if (!is_integer(q)) {
        throw IntegralityError(std::string(context) + ": accumulated sum " +
                               q.str() + " is not an integer");
    }
    return numerator(q);
}

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (n < 0) {
        throw DomainError("binomial: upper index must be >= 0, got " +
                          std::to_string(n));
    }
    if (r < 0 || r > n) {
        return 0;
    }
    // Multiplicative formula with a division at every step; each partial
    // product res == C(n-r'+t, t) so the division is exact.
    const std::int64_t rr = r < n - r ? r : n - r;
    BigInt res = 1;
    for (std::int64_t t = 1; t <= rr; ++t) {
        res *= n - rr + t;
        res /= t;
    }
    return res;
}

bool pascal_check(std::int64_t n, std::int64_t r) {
    return binomial(n, r) + binomial(n, r - 1) == binomial(n + 1, r);
}

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DomainError("integer parameter arithmetic overflowed");
    }
    return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw DomainError("integer parameter arithmetic overflowed");
    }
    return out;
}

} // namespace checked

} // namespace latcount
