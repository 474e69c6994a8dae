#pragma once

#include <cstdint>
#include <vector>

#include "latcount/exact.hpp"

/// Small reference implementations kept deliberately naive and independent
/// of the library internals, so a bug would have to be made twice to slip
/// through.
namespace oracle {

using latcount::BigInt;

/// Pascal's triangle by repeated addition.
inline BigInt pascal_binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n)
        return 0;
    std::vector<BigInt> row{1};
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, 1);
        for (std::int64_t j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

/// Determinant by first-row cofactor expansion.
inline BigInt cofactor_determinant(
    const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    BigInt det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        std::vector<std::vector<BigInt>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj != j)
                    row.push_back(a[i][jj]);
            }
            minor.push_back(std::move(row));
        }
        const BigInt term = a[0][j] * cofactor_determinant(minor);
        if (j % 2 == 1)
            det -= term;
        else
            det += term;
    }
    return det;
}

/// Monotone paths from (x, y) to (mx, my) whose visited points all pass
/// `ok`, counted by plain recursion with no pruning or memoisation.
template <typename Pred>
BigInt count_paths_recursive(std::int64_t x, std::int64_t y, std::int64_t mx,
                             std::int64_t my, Pred ok) {
    if (!ok(x, y))
        return 0;
    if (x == mx && y == my)
        return 1;
    BigInt total = 0;
    if (x < mx)
        total += count_paths_recursive(x + 1, y, mx, my, ok);
    if (y < my)
        total += count_paths_recursive(x, y + 1, mx, my, ok);
    return total;
}

/// The main counting instance via the recursive path oracle.
inline BigInt count_instance(std::int64_t m, std::int64_t n, std::int64_t u,
                             std::int64_t k) {
    return count_paths_recursive(
        u + 1, 1, m, n, [k](std::int64_t x, std::int64_t y) {
            return (k - 1) * (y - 1) <= x - 1;
        });
}

} // namespace oracle
