#include "latcount/closedform.hpp"

#include <string>

#include "latcount/errors.hpp"

namespace latcount {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) {
        throw DomainError(msg);
    }
}

BigInt closed_form_sum(const QueryParams& p, bool flip_tail_signs) {
    const std::int64_t m = p.m(), n = p.n(), u = p.u(), k = p.k();
    const std::int64_t top = u / k;
    const std::int64_t mn1 = checked::add(m, n) - 1;
    const BigInt lead = m - (k - 1) * (n - 1);
    BigRational total = 0;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t denom = mn1 - k * i;
        if (denom < 2) {
            throw InternalError("closed form reached denominator < 2");
        }
        BigRational term(lead, denom);
        term *= binomial(denom, n - 1 - i);
        term *= binomial(u - (k - 1) * i, i);
        const bool negative = (i % 2 == 1) != (flip_tail_signs && i >= 1);
        if (negative) {
            total -= term;
        } else {
            total += term;
        }
    }
    return to_integer_exact(total, "count_by_closed_form");
}

} // namespace

AboveLineQuery::AboveLineQuery(std::int64_t a_, std::int64_t b_,
                               std::int64_t m_, std::int64_t n_,
                               std::int64_t k_)
    : a(a_), b(b_), m(m_), n(n_), k(k_) {
    require(k >= 1, "above-line query: k must be >= 1");
    require(0 <= a && a <= m, "above-line query: need 0 <= a <= m");
    require(checked::mul(k, a) <= b && b <= n,
            "above-line query: need ka <= b <= n");
    require(n >= checked::mul(k, m), "above-line query: need n >= km");
}

BelowLineQuery::BelowLineQuery(std::int64_t a_, std::int64_t b_,
                               std::int64_t m_, std::int64_t n_,
                               std::int64_t k_)
    : a(a_), b(b_), m(m_), n(n_), k(k_) {
    require(k >= 1, "below-line query: k must be >= 1");
    require(0 <= b && b <= n, "below-line query: need 0 <= b <= n");
    require(checked::mul(k, b) <= a && a <= m,
            "below-line query: need kb <= a <= m");
    require(n >= 1, "below-line query: n must be >= 1");
    require(m >= checked::mul(k, n), "below-line query: need m >= kn");
}

BigInt count_by_closed_form(const QueryParams& p) {
    return closed_form_sum(p, false);
}

BigInt count_above_line(const AboveLineQuery& q) {
    const std::int64_t kp1 = checked::add(q.k, 1);
    const std::int64_t np1 = checked::add(q.n, 1);
    const std::int64_t mn = checked::add(q.m, q.n);
    const std::int64_t top = (q.b - q.k * q.a) / kp1;
    const BigInt lead = np1 - q.k * q.m;
    BigRational total = 0;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t denom = np1 - q.k * (q.a + i);
        if (denom <= 0) {
            throw InternalError("above-line sum reached denominator <= 0");
        }
        BigRational term(lead, denom);
        term *= binomial(mn - kp1 * (q.a + i), q.m - q.a - i);
        term *= binomial(q.b - q.k * (q.a + i), i);
        if (i % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return to_integer_exact(total, "count_above_line");
}

BigInt count_below_line(const BelowLineQuery& q) {
    const std::int64_t kp1 = checked::add(q.k, 1);
    const std::int64_t mp1 = checked::add(q.m, 1);
    const std::int64_t mn = checked::add(q.m, q.n);
    const std::int64_t top = (q.a - q.k * q.b) / kp1;
    const BigInt lead = mp1 - q.k * q.n;
    BigRational total = 0;
    for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t denom = mp1 - q.k * (q.b + i);
        if (denom <= 0) {
            throw InternalError("below-line sum reached denominator <= 0");
        }
        BigRational term(lead, denom);
        term *= binomial(mn - kp1 * (q.b + i), q.n - q.b - i);
        term *= binomial(q.a - q.k * (q.b + i), i);
        if (i % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return to_integer_exact(total, "count_below_line");
}

namespace detail {

BigInt count_by_closed_form_sign_flipped(const QueryParams& p) {
    return closed_form_sum(p, true);
}

} // namespace detail

} // namespace latcount
