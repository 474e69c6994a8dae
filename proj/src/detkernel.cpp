#include "latcount/detkernel.hpp"

#include <string>
#include <utility>

#include "latcount/errors.hpp"

namespace latcount {

BinomialMatrix::BinomialMatrix(std::vector<std::vector<BigInt>> rows,
                               MatrixVariant variant)
    : order_(static_cast<std::int64_t>(rows.size())), variant_(variant) {
    if (order_ < 1) {
        throw DomainError("matrix order must be >= 1");
    }
    entries_.reserve(static_cast<std::size_t>(order_ * order_));
    for (auto& r : rows) {
        if (static_cast<std::int64_t>(r.size()) != order_) {
            throw DomainError("matrix rows must all have length " +
                              std::to_string(order_));
        }
        for (auto& v : r) {
            entries_.push_back(std::move(v));
        }
    }
}

const BigInt& BinomialMatrix::at(std::int64_t i, std::int64_t j) const {
    if (i < 1 || i > order_ || j < 1 || j > order_) {
        throw DomainError("matrix index out of range");
    }
    return entries_[static_cast<std::size_t>((i - 1) * order_ + (j - 1))];
}

std::vector<BigInt> BinomialMatrix::row(std::int64_t i) const {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t j = 1; j <= order_; ++j) {
        out.push_back(at(i, j));
    }
    return out;
}

namespace {

std::int64_t band_max(const QueryParams& p, std::int64_t j) {
    const std::int64_t band = (p.k() - 1) * j;
    return p.u() > band ? p.u() : band;
}

} // namespace

BinomialMatrix build_matrix(const QueryParams& p) {
    const std::int64_t order = p.n() - 1;
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(order));
    for (std::int64_t i = 1; i <= order; ++i) {
        std::vector<BigInt> r;
        r.reserve(static_cast<std::size_t>(order));
        for (std::int64_t j = 1; j <= order; ++j) {
            r.push_back(binomial(p.m() - band_max(p, j), 1 - i + j));
        }
        rows.push_back(std::move(r));
    }
    return BinomialMatrix(std::move(rows), MatrixVariant::original);
}

BinomialMatrix build_row_reduced(const QueryParams& p) {
    if (p.n() < 3) {
        throw DomainError("row reduction needs n >= 3 (got n = " +
                          std::to_string(p.n()) + ")");
    }
    const std::int64_t order = p.n() - 1;
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(order));
    for (std::int64_t i = 1; i < order; ++i) {
        std::vector<BigInt> r;
        r.reserve(static_cast<std::size_t>(order));
        for (std::int64_t j = 1; j <= order; ++j) {
            r.push_back(binomial(p.m() + 1 - band_max(p, j), 1 - i + j));
        }
        rows.push_back(std::move(r));
    }
    std::vector<BigInt> bottom;
    bottom.reserve(static_cast<std::size_t>(order));
    for (std::int64_t j = 1; j <= order; ++j) {
        bottom.push_back(binomial(p.m() - band_max(p, j), 1 - order + j));
    }
    rows.push_back(std::move(bottom));
    return BinomialMatrix(std::move(rows), MatrixVariant::row_reduced);
}

BigInt determinant(const BinomialMatrix& mat) {
    const std::int64_t n = mat.order();
    // Private scratch copy, 0-based.
    std::vector<BigInt> a;
    a.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = 1; j <= n; ++j) {
            a.push_back(mat.at(i, j));
        }
    }
    auto e = [&](std::int64_t i, std::int64_t j) -> BigInt& {
        return a[static_cast<std::size_t>(i * n + j)];
    };

    int sign = 1;
    BigInt prev = 1;
    for (std::int64_t p = 0; p + 1 < n; ++p) {
        if (e(p, p) == 0) {
            std::int64_t r = p + 1;
            while (r < n && e(r, p) == 0) {
                ++r;
            }
            if (r == n) {
                return 0; // pivot column exhausted below the diagonal
            }
            for (std::int64_t j = 0; j < n; ++j) {
                e(p, j).swap(e(r, j));
            }
            sign = -sign;
        }
        for (std::int64_t i = p + 1; i < n; ++i) {
            for (std::int64_t j = p + 1; j < n; ++j) {
                BigInt num = e(p, p) * e(i, j) - e(i, p) * e(p, j);
                BigInt q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) {
                    throw InternalError(
                        "fraction-free elimination produced an inexact "
                        "division");
                }
                e(i, j) = std::move(q);
            }
            e(i, p) = 0;
        }
        prev = e(p, p);
    }
    return sign * e(n - 1, n - 1);
}

BigInt count_by_determinant(const QueryParams& p) {
    return determinant(build_matrix(p));
}

bool check_bottom_row(const QueryParams& p) {
    const BinomialMatrix orig = build_matrix(p);
    const BinomialMatrix reduced = build_row_reduced(p);
    const std::int64_t order = p.n() - 1;
    for (std::int64_t j = 1; j <= order; ++j) {
        BigInt want = 0;
        if (j == order - 1) {
            want = 1;
        } else if (j == order) {
            want = p.m() - band_max(p, order);
        }
        if (orig.at(order, j) != want || reduced.at(order, j) != want) {
            return false;
        }
    }
    return true;
}

bool check_column_decomposition(const QueryParams& p) {
    if (p.n() < 3) {
        throw DomainError("column decomposition needs n >= 3");
    }
    const QueryParams wider(p.m() + 1, p.n(), p.u(), p.k());
    const QueryParams shorter(p.m() + 1, p.n() - 1, p.u(), p.k());
    return count_by_determinant(p) ==
           count_by_determinant(wider) - count_by_determinant(shorter);
}

} // namespace latcount
