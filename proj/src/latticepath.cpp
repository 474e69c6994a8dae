#include "latcount/latticepath.hpp"

#include <algorithm>
#include <utility>

#include "latcount/errors.hpp"

namespace latcount {

LatticePath::LatticePath(Point start, std::vector<Step> steps)
    : start_(start), steps_(std::move(steps)) {}

Point LatticePath::end() const {
    Point p = start_;
    for (Step s : steps_) {
        if (s == Step::E)
            ++p.x;
        else
            ++p.y;
    }
    return p;
}

std::vector<Point> LatticePath::points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point p = start_;
    out.push_back(p);
    for (Step s : steps_) {
        if (s == Step::E)
            ++p.x;
        else
            ++p.y;
        out.push_back(p);
    }
    return out;
}

std::string LatticePath::step_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_)
        out.push_back(s == Step::E ? 'E' : 'N');
    return out;
}

BoundaryLine BoundaryLine::below_shifted(std::int64_t k) {
    if (k < 2)
        throw DomainError("below_shifted boundary needs k >= 2 (got " +
                          std::to_string(k) + ")");
    return BoundaryLine(Form::below_shifted, k);
}

BoundaryLine BoundaryLine::below_origin(std::int64_t k) {
    if (k < 1)
        throw DomainError("below_origin boundary needs k >= 1 (got " +
                          std::to_string(k) + ")");
    return BoundaryLine(Form::below_origin, k);
}

BoundaryLine BoundaryLine::above_origin(std::int64_t k) {
    if (k < 1)
        throw DomainError("above_origin boundary needs k >= 1 (got " +
                          std::to_string(k) + ")");
    return BoundaryLine(Form::above_origin, k);
}

bool BoundaryLine::admits(Point p) const {
    // 128-bit products keep the comparison exact for any int64 point.
    using Wide = __int128;
    switch (form_) {
    case Form::below_shifted:
        return Wide(k_ - 1) * (Wide(p.y) - 1) <= Wide(p.x) - 1;
    case Form::below_origin:
        return Wide(k_) * Wide(p.y) <= Wide(p.x);
    case Form::above_origin:
        return Wide(p.y) >= Wide(k_) * Wide(p.x);
    }
    throw InternalError("unhandled boundary form");
}

bool path_satisfies(const LatticePath& path, const BoundaryLine& boundary) {
    Point p = path.start();
    if (!boundary.admits(p))
        return false;
    for (Step s : path.steps()) {
        if (s == Step::E)
            ++p.x;
        else
            ++p.y;
        if (!boundary.admits(p))
            return false;
    }
    return true;
}

PathQuery::PathQuery(Point start_, Point end_, BoundaryLine boundary_)
    : start(start_), end(end_), boundary(boundary_) {
    if (!boundary.admits(start))
        throw DomainError("path query start (" + std::to_string(start.x) +
                          "," + std::to_string(start.y) +
                          ") violates the boundary");
}

namespace {

void extend_paths(const PathQuery& q, Point p, std::vector<Step>& cur,
                  std::vector<LatticePath>& out) {
    if (p.x == q.end.x && p.y == q.end.y) {
        out.emplace_back(q.start, cur);
        return;
    }
    // E before N gives lexicographic order of the step strings.
    if (p.x < q.end.x) {
        Point next{p.x + 1, p.y};
        if (q.boundary.admits(next)) {
            cur.push_back(Step::E);
            extend_paths(q, next, cur, out);
            cur.pop_back();
        }
    }
    if (p.y < q.end.y) {
        Point next{p.x, p.y + 1};
        if (q.boundary.admits(next)) {
            cur.push_back(Step::N);
            extend_paths(q, next, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<LatticePath> enumerate_paths(const PathQuery& q,
                                         std::int64_t cap) {
    const std::int64_t dx = q.end.x - q.start.x;
    const std::int64_t dy = q.end.y - q.start.y;
    if (dx < 0 || dy < 0)
        return {};
    if (dx + dy > cap)
        throw SizeError("path enumeration over " + std::to_string(dx + dy) +
                        " steps exceeds the cap of " + std::to_string(cap));
    std::vector<LatticePath> out;
    std::vector<Step> cur;
    cur.reserve(static_cast<std::size_t>(dx + dy));
    extend_paths(q, q.start, cur, out);
    return out;
}

PathCountTable::PathCountTable(std::int64_t u, std::int64_t k,
                               std::int64_t m_max, std::int64_t n_max)
    : u_(u), k_(k), m_max_(m_max), n_max_(n_max) {
    if (u < 0)
        throw DomainError("u must be >= 0 (got " + std::to_string(u) + ")");
    if (k < 2)
        throw DomainError("k must be >= 2 (got " + std::to_string(k) + ")");
    if (n_max < 2)
        throw DomainError("n_max must be >= 2 (got " + std::to_string(n_max) +
                          ")");
    const std::int64_t lo_last = QueryParams::min_m_for(n_max, u, k);
    if (m_max < lo_last)
        throw DomainError(
            "m_max must be >= max{u+1,(k-1)(n_max-1)} = " +
            std::to_string(lo_last) + " (got " + std::to_string(m_max) + ")");

    rows_.assign(static_cast<std::size_t>(n_max) + 1,
                 std::vector<BigInt>(static_cast<std::size_t>(m_max) + 1));
    for (std::int64_t n = 2; n <= n_max; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        const std::int64_t lo = QueryParams::min_m_for(n, u, k);
        for (std::int64_t m = lo; m <= m_max; ++m) {
            BigInt& cell = row[static_cast<std::size_t>(m)];
            if (m == u + 1 && u >= k - 1 && n <= u / (k - 1) + 1) {
                // Start column: the forced staircase leaves exactly one path.
                cell = 1;
            } else if (m == (k - 1) * (n - 1)) {
                // End point sits on the line; the last unit step must come
                // from a point above it, so nothing arrives.
                cell = 0;
            } else if (n == 2) {
                cell = m - std::max(u, k - 1);
            } else {
                cell = row[static_cast<std::size_t>(m - 1)] +
                       prev[static_cast<std::size_t>(m)];
            }
        }
    }
}

std::int64_t PathCountTable::min_m(std::int64_t n) const {
    if (n < 2 || n > n_max_)
        throw DomainError("row index n must be in [2, " +
                          std::to_string(n_max_) + "] (got " +
                          std::to_string(n) + ")");
    return QueryParams::min_m_for(n, u_, k_);
}

const BigInt& PathCountTable::at(std::int64_t m, std::int64_t n) const {
    if (n < 2 || n > n_max_)
        throw DomainError("row index n must be in [2, " +
                          std::to_string(n_max_) + "] (got " +
                          std::to_string(n) + ")");
    if (m < 0 || m > m_max_)
        throw DomainError("column index m must be in [0, " +
                          std::to_string(m_max_) + "] (got " +
                          std::to_string(m) + ")");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

PathCountTable count_paths_dp(std::int64_t u, std::int64_t k,
                              std::int64_t m_max, std::int64_t n_max) {
    return PathCountTable(u, k, m_max, n_max);
}

LatticePath reflect_path(const LatticePath& path) {
    std::vector<Step> steps;
    steps.reserve(path.steps().size());
    for (Step s : path.steps())
        steps.push_back(s == Step::E ? Step::N : Step::E);
    return LatticePath(Point{path.start().y, path.start().x},
                       std::move(steps));
}

LatticePath shift_path(const LatticePath& path, std::int64_t dx,
                       std::int64_t dy) {
    return LatticePath(Point{checked::add(path.start().x, dx),
                             checked::add(path.start().y, dy)},
                       path.steps());
}

} // namespace latcount
