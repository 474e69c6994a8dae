#include "latcount/families.hpp"

#include <string>

#include "latcount/errors.hpp"

namespace latcount {

namespace {

BigInt divide_exactly(const BigInt& num, const BigInt& den,
                      const char* context) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw IntegralityError(std::string(context) +
                               " did not reduce to an integer");
    return q;
}

} // namespace

BigInt catalan(std::int64_t n) {
    if (n < 1)
        throw DomainError("catalan needs n >= 1 (got " + std::to_string(n) +
                          ")");
    return divide_exactly(binomial(checked::mul(2, n), n), BigInt(n) + 1,
                          "catalan");
}

BigInt fuss_catalan(std::int64_t n, std::int64_t k) {
    if (n < 1)
        throw DomainError("fuss_catalan needs n >= 1 (got " +
                          std::to_string(n) + ")");
    if (k < 2)
        throw DomainError("fuss_catalan needs k >= 2 (got " +
                          std::to_string(k) + ")");
    const BigInt den = BigInt(k - 1) * n + 1;
    return divide_exactly(binomial(checked::mul(k, n), n), den,
                          "fuss_catalan");
}

BigInt ballot(std::int64_t m, std::int64_t n) {
    if (n < 1)
        throw DomainError("ballot needs n >= 1 (got " + std::to_string(n) +
                          ")");
    if (m < n)
        throw DomainError("ballot needs m >= n (got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
    const BigRational lead(BigInt(m) - n + 1, BigInt(m) + 1);
    const BigRational total =
        lead * BigRational(binomial(checked::add(m, n), n));
    return to_integer_exact(total, "ballot");
}

BigInt generalized_ballot(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (k < 1)
        throw DomainError("generalized_ballot needs k >= 1 (got " +
                          std::to_string(k) + ")");
    if (n < 1)
        throw DomainError("generalized_ballot needs n >= 1 (got " +
                          std::to_string(n) + ")");
    if (m + 1 <= checked::mul(k, n))
        throw DomainError("generalized_ballot needs m + 1 > k*n (got m=" +
                          std::to_string(m) + ", n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    const BigRational lead(BigInt(m) + 1 - BigInt(k) * n, BigInt(m) + 1);
    const BigRational total =
        lead * BigRational(binomial(checked::add(m, n), n));
    return to_integer_exact(total, "generalized_ballot");
}

} // namespace latcount
