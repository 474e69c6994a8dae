#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "latcount/errors.hpp"

namespace latcount {

/// Exact signed integer of unbounded magnitude.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const BigRational& q) {
    return denominator(q) == 1;
}

/// Returns the integer value of q, or throws IntegralityError (with `context`
/// in the message) if q has a nontrivial denominator.
BigInt to_integer_exact(const BigRational& q, const char* context);

/// C(n, r) for n >= 0. Out-of-range lower index (r < 0 or r > n) yields 0.
/// A negative upper index never arises from validated parameters, so it is
/// rejected as a DomainError instead of being interpreted generally.
BigInt binomial(std::int64_t n, std::int64_t r);

/// True iff C(n,r) + C(n,r-1) == C(n+1,r). Property-test helper.
bool pascal_check(std::int64_t n, std::int64_t r);

namespace checked {

/// int64 arithmetic that refuses to overflow silently.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

} // namespace checked

} // namespace latcount
