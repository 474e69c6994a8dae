#pragma once

#include <cstdint>
#include <vector>

#include "latcount/exact.hpp"
#include "latcount/params.hpp"

namespace latcount {

/// Which construction a BinomialMatrix came from. `row_reduced` is the
/// variant where each of the first n-2 rows has had its successor row folded
/// in (so their entries carry upper index m+1); the bottom row is untouched.
enum class MatrixVariant { original, row_reduced };

/// Dense square integer matrix with 1-based element access, matching the
/// i, j = 1..n-1 indexing the entry formulas are written in.
class BinomialMatrix {
public:
    BinomialMatrix(std::vector<std::vector<BigInt>> rows,
                   MatrixVariant variant = MatrixVariant::original);

    std::int64_t order() const { return order_; }
    MatrixVariant variant() const { return variant_; }

    /// Entry at row i, column j; both indices run 1..order().
    const BigInt& at(std::int64_t i, std::int64_t j) const;

    /// Copy of row i (1-based).
    std::vector<BigInt> row(std::int64_t i) const;

private:
    std::int64_t order_;
    MatrixVariant variant_;
    std::vector<BigInt> entries_; // row-major
};

/// The (n-1)x(n-1) matrix with entries C(m - max{u,(k-1)j}, 1-i+j).
BinomialMatrix build_matrix(const QueryParams& p);

/// The row-reduced variant: rows 1..n-2 have entries
/// C(m+1 - max{u,(k-1)j}, 1-i+j), the bottom row equals the original's.
/// Requires n >= 3 (for n = 2 there is nothing to fold).
BinomialMatrix build_row_reduced(const QueryParams& p);

/// Exact determinant by fraction-free (Bareiss) elimination. Zero pivots are
/// repaired by swapping in the first lower row with a nonzero entry in the
/// pivot column (sign tracked); if no such row exists the determinant is 0.
/// Every internal division must be exact; a remainder raises InternalError.
BigInt determinant(const BinomialMatrix& mat);

/// determinant(build_matrix(p)).
BigInt count_by_determinant(const QueryParams& p);

/// True iff the bottom row of both variants equals
/// (0, ..., 0, 1, m - max{u,(k-1)(n-1)}). Requires n >= 3.
bool check_bottom_row(const QueryParams& p);

/// True iff count(m,n) == count(m+1,n) - count(m+1,n-1) via determinants.
/// Requires n >= 3; holds on the whole validated domain.
bool check_column_decomposition(const QueryParams& p);

} // namespace latcount
