#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcount/exact.hpp"
#include "latcount/params.hpp"

namespace latcount {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// One unit step: East = (1,0), North = (0,1).
enum class Step : std::uint8_t { E, N };

/// A monotone lattice path: a start point plus its step sequence. Visited
/// points are derived on demand; the path itself stays compact.
class LatticePath {
public:
    LatticePath(Point start, std::vector<Step> steps);

    const Point& start() const { return start_; }
    const std::vector<Step>& steps() const { return steps_; }
    Point end() const;

    /// Start plus every prefix sum, in order (size() == steps.size() + 1).
    std::vector<Point> points() const;

    /// Steps rendered as a string over {E, N}, e.g. "EENEN".
    std::string step_string() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    Point start_;
    std::vector<Step> steps_;
};

/// A rational-slope constraint evaluated in exact integer arithmetic:
///   below_shifted(k): y <= (x-1)/(k-1) + 1, i.e. (k-1)(y-1) <= x-1  (k >= 2)
///   below_origin(k):  y <= x/k,             i.e. ky <= x            (k >= 1)
///   above_origin(k):  y >= kx                                        (k >= 1)
class BoundaryLine {
public:
    enum class Form { below_shifted, below_origin, above_origin };

    static BoundaryLine below_shifted(std::int64_t k);
    static BoundaryLine below_origin(std::int64_t k);
    static BoundaryLine above_origin(std::int64_t k);

    Form form() const { return form_; }
    std::int64_t k() const { return k_; }

    /// Whether the point satisfies the (weak) constraint.
    bool admits(Point p) const;

private:
    BoundaryLine(Form form, std::int64_t k) : form_(form), k_(k) {}
    Form form_;
    std::int64_t k_;
};

/// True iff every visited point of the path, start and end included,
/// satisfies the boundary.
bool path_satisfies(const LatticePath& path, const BoundaryLine& boundary);

/// An enumeration request. The start must satisfy the boundary; the end may
/// violate it, in which case the query simply has zero paths (the convention
/// that puts 0 on the boundary-excluded cells).
struct PathQuery {
    PathQuery(Point start, Point end, BoundaryLine boundary);
    Point start;
    Point end;
    BoundaryLine boundary;
};

constexpr std::int64_t kDefaultEnumerationCap = 22;

/// All monotone paths from q.start to q.end that satisfy the boundary, in
/// lexicographic step order with E before N. The total coordinate gap
/// (dx + dy) must not exceed `cap`, else SizeError.
std::vector<LatticePath> enumerate_paths(
    const PathQuery& q, std::int64_t cap = kDefaultEnumerationCap);

/// Grid of counts for paths from (u+1, 1) weakly below y = (x-1)/(k-1) + 1,
/// filled row by row from the three boundary seedings and the two-term
/// recurrence. Cells left of the valid region hold 0.
class PathCountTable {
public:
    PathCountTable(std::int64_t u, std::int64_t k, std::int64_t m_max,
                   std::int64_t n_max);

    std::int64_t u() const { return u_; }
    std::int64_t k() const { return k_; }
    std::int64_t m_max() const { return m_max_; }
    std::int64_t n_max() const { return n_max_; }

    /// Smallest m of the valid region in row n: max{u+1, (k-1)(n-1)}.
    std::int64_t min_m(std::int64_t n) const;

    /// Count at (m, n) for 2 <= n <= n_max and 0 <= m <= m_max. Cells with
    /// m below the valid region are 0.
    const BigInt& at(std::int64_t m, std::int64_t n) const;

private:
    std::int64_t u_, k_, m_max_, n_max_;
    std::vector<std::vector<BigInt>> rows_; // rows_[n][m], n = 0..n_max
};

/// Builds the full table; requires u >= 0, k >= 2, n_max >= 2 and
/// m_max >= max{u+1, (k-1)(n_max-1)} so that every row is nonempty.
PathCountTable count_paths_dp(std::int64_t u, std::int64_t k,
                              std::int64_t m_max, std::int64_t n_max);

/// Mirror along the diagonal y = x: swaps the start coordinates and turns
/// every E into N and vice versa. An involution.
LatticePath reflect_path(const LatticePath& path);

/// Translate the whole path by (dx, dy); the step sequence is unchanged.
LatticePath shift_path(const LatticePath& path, std::int64_t dx,
                       std::int64_t dy);

} // namespace latcount
