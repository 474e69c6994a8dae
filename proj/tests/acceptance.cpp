// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures. Frozen values come from independently computed fixtures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latcount/closedform.hpp"
#include "latcount/detkernel.hpp"
#include "latcount/errors.hpp"
#include "latcount/families.hpp"
#include "latcount/latticepath.hpp"
#include "latcount/params.hpp"
#include "latcount/sweep.hpp"

#include "subprocess.hpp"

using namespace latcount;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS criterion " << number << ": " << title << "\n";
    } else {
        std::cout << "FAIL criterion " << number << ": " << title;
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << "\n";
        ++failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

bool grid_criterion(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const testutil::RunResult r = testutil::run_binary(
        {LATCOUNT_BIN, "table", "--u", "1", "--k", "3", "--m-max", "11",
         "--n-max", "5", "--format", "csv"});
    const double elapsed = seconds_since(start);
    if (r.exit_code != 0) {
        detail = "table exited with " + std::to_string(r.exit_code);
        return false;
    }

    const std::vector<std::vector<int>> grid{
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, // n = 2, m = 2..11
        {0, 3, 7, 12, 18, 25, 33, 42},  // n = 3, m = 4..11
        {0, 12, 30, 55, 88, 130},       // n = 4, m = 6..11
        {0, 55, 143, 273},              // n = 5, m = 8..11
    };
    std::ostringstream want;
    want << "m,n,count\n";
    for (std::size_t row = 0; row < grid.size(); ++row) {
        const std::int64_t n = static_cast<std::int64_t>(row) + 2;
        const std::int64_t lo = QueryParams::min_m_for(n, 1, 3);
        for (std::size_t i = 0; i < grid[row].size(); ++i)
            want << lo + static_cast<std::int64_t>(i) << "," << n << ","
                 << grid[row][i] << "\n";
    }
    if (r.out != want.str()) {
        detail = "CSV output differs from the frozen grid";
        return false;
    }

    // The row below the first visible one: a single admissible path each.
    for (std::int64_t m = 2; m <= 11; ++m) {
        const PathQuery q(Point{2, 1}, Point{m, 1},
                          BoundaryLine::below_shifted(3));
        if (enumerate_paths(q).size() != 1) {
            detail = "flat row is not a single path at m=" +
                     std::to_string(m);
            return false;
        }
    }

    // The row above the last visible one.
    if (count_by_determinant(QueryParams(10, 6, 1, 3)) != 0 ||
        count_by_determinant(QueryParams(11, 6, 1, 3)) != 273) {
        detail = "row n=6 does not extend the grid";
        return false;
    }

    if (elapsed >= 1.0) {
        detail = "took " + std::to_string(elapsed) + "s (budget 1s)";
        return false;
    }
    return true;
}

bool sweep_cli_criterion(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const testutil::RunResult r = testutil::run_binary(
        {LATCOUNT_BIN, "verify", "--u-max", "6", "--k-max", "5", "--n-max",
         "7", "--m-extra", "6", "--brute-cap", "16"});
    const double elapsed = seconds_since(start);
    if (r.exit_code != 0) {
        detail = "verify exited with " + std::to_string(r.exit_code);
        return false;
    }
    if (r.out.find("instances checked: 1176") == std::string::npos) {
        detail = "expected 1176 instances";
        return false;
    }
    if (r.out.find("mismatches: 0") == std::string::npos) {
        detail = "sweep reported mismatches";
        return false;
    }
    if (elapsed >= 60.0) {
        detail = "took " + std::to_string(elapsed) + "s (budget 60s)";
        return false;
    }
    return true;
}

bool random_agreement_criterion(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0xC0FFEE);
    int done = 0;
    while (done < 200) {
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 19);
        const std::int64_t u = static_cast<std::int64_t>(rng() % 7);
        const std::int64_t lo = QueryParams::min_m_for(n, u, k);
        if (lo + n > 60)
            continue;
        const std::int64_t m =
            lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                               60 - n - lo + 1));
        const QueryParams p(m, n, u, k);
        const BigInt det = count_by_determinant(p);
        const BigInt sum = count_by_closed_form(p);
        const BigInt dp = count_paths_dp(u, k, m, n).at(m, n);
        if (det != sum || det != dp) {
            detail = "disagreement at m=" + std::to_string(m) +
                     " n=" + std::to_string(n) + " u=" + std::to_string(u) +
                     " k=" + std::to_string(k);
            return false;
        }
        ++done;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        detail = "took " + std::to_string(elapsed) + "s (budget 30s)";
        return false;
    }
    return true;
}

bool families_criterion(std::string& detail) {
    const std::vector<int> catalan_front{1, 2, 5, 14, 42, 132, 429, 1430,
                                         4862};
    for (std::size_t i = 0; i < catalan_front.size(); ++i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        if (catalan(n) != catalan_front[i] ||
            catalan(n) !=
                count_by_determinant(QueryParams(n + 1, n + 1, 0, 2))) {
            detail = "catalan(" + std::to_string(n) + ")";
            return false;
        }
    }

    const std::vector<int> fuss_front{1, 3, 12, 55, 273, 1428};
    for (std::size_t i = 0; i < fuss_front.size(); ++i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        if (fuss_catalan(n, 3) != fuss_front[i]) {
            detail = "fuss_catalan(" + std::to_string(n) + ", 3)";
            return false;
        }
    }
    for (std::int64_t k = 2; k <= 5; ++k) {
        for (std::int64_t n = 1; n <= 5; ++n) {
            if (fuss_catalan(n, k) !=
                count_by_determinant(
                    QueryParams((k - 1) * n + 1, n + 1, 0, k))) {
                detail = "fuss_catalan(" + std::to_string(n) + ", " +
                         std::to_string(k) + ")";
                return false;
            }
        }
    }

    if (ballot(3, 2) != 5 || ballot(1, 1) != 1 || ballot(5, 2) != 14) {
        detail = "ballot fixtures";
        return false;
    }
    for (std::int64_t m = 1; m <= 7; ++m) {
        for (std::int64_t n = 1; n <= m; ++n) {
            if (ballot(m, n) !=
                count_by_determinant(QueryParams(m + 1, n + 1, 0, 2))) {
                detail = "ballot(" + std::to_string(m) + ", " +
                         std::to_string(n) + ")";
                return false;
            }
        }
    }

    if (generalized_ballot(10, 4, 2) != 273 ||
        generalized_ballot(6, 3, 2) != fuss_catalan(3, 3)) {
        detail = "generalized ballot fixtures";
        return false;
    }
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t n = 1; n <= 4; ++n) {
            for (std::int64_t m = k * n; m <= k * n + 6; ++m) {
                if (generalized_ballot(m, n, k) !=
                    count_by_determinant(
                        QueryParams(m + 1, n + 1, 0, k + 1))) {
                    detail = "generalized_ballot(" + std::to_string(m) +
                             ", " + std::to_string(n) + ", " +
                             std::to_string(k) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

SweepReport& shared_sweep() {
    static SweepReport report = [] {
        SweepOptions opts;
        opts.u_max = 4;
        opts.k_max = 4;
        opts.n_max = 6;
        opts.m_extra = 5;
        opts.brute_cap = 14;
        return run_verification_sweep(opts);
    }();
    return report;
}

bool structural_checks_criterion(std::string& detail) {
    const SweepReport& report = shared_sweep();
    if (!report.ok()) {
        detail = "sweep reported " + std::to_string(report.mismatches.size()) +
                 " mismatch(es)";
        return false;
    }
    for (const char* name :
         {"four_way", "recurrence", "row_two_formula", "unit_triangular",
          "vanishing_column", "bottom_row", "column_split", "substitution",
          "forced_prefix", "reflection"}) {
        const auto it = report.checks_run.find(name);
        if (it == report.checks_run.end() || it->second <= 0) {
            detail = std::string("check never ran: ") + name;
            return false;
        }
    }
    return true;
}

bool integrality_criterion(std::string& detail) {
    try {
        for (std::int64_t u = 0; u <= 8; ++u) {
            for (std::int64_t k = 2; k <= 5; ++k) {
                for (std::int64_t n = 2; n <= 8; ++n) {
                    const std::int64_t lo = QueryParams::min_m_for(n, u, k);
                    for (std::int64_t m = lo; m <= lo + 8; ++m) {
                        const BigInt c =
                            count_by_closed_form(QueryParams(m, n, u, k));
                        if (c < 0) {
                            detail = "negative count";
                            return false;
                        }
                    }
                }
            }
        }
        for (std::int64_t n = 1; n <= 60; ++n)
            catalan(n);
        for (std::int64_t k = 2; k <= 6; ++k) {
            for (std::int64_t n = 1; n <= 20; ++n)
                fuss_catalan(n, k);
        }
        for (std::int64_t m = 1; m <= 15; ++m) {
            for (std::int64_t n = 1; n <= m; ++n)
                ballot(m, n);
        }
        for (std::int64_t k = 1; k <= 4; ++k) {
            for (std::int64_t n = 1; n <= 6; ++n) {
                for (std::int64_t m = k * n; m <= k * n + 8; ++m)
                    generalized_ballot(m, n, k);
            }
        }
    } catch (const IntegralityError& e) {
        detail = std::string("IntegralityError: ") + e.what();
        return false;
    }
    return true;
}

bool reflection_criterion(std::string& detail) {
    const SweepReport& report = shared_sweep();
    std::int64_t expected = 0;
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t m = 0; m <= 12; ++m) {
            for (std::int64_t n = k * m; n + m <= 12; ++n) {
                for (std::int64_t a = 0; a <= m; ++a)
                    expected += n - k * a + 1;
            }
        }
    }
    const auto it = report.checks_run.find("reflection");
    if (it == report.checks_run.end() || it->second != expected) {
        detail = "expected " + std::to_string(expected) +
                 " reflection queries";
        return false;
    }
    for (const SweepMismatch& mm : report.mismatches) {
        if (mm.check == "reflection") {
            detail = "reflection mismatch at " + mm.instance;
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "the grid command reproduces the frozen reference grid",
              grid_criterion);
    criterion(2, "the verification sweep is clean over the pinned ranges",
              sweep_cli_criterion);
    criterion(3, "three methods agree on 200 random instances up to m+n=60",
              random_agreement_criterion);
    criterion(4, "classical families match their frozen values and the "
                 "matrix count",
              families_criterion);
    criterion(5, "every structural identity check runs and passes",
              structural_checks_criterion);
    criterion(6, "exact divisions never leave a remainder",
              integrality_criterion);
    criterion(7, "the reflection suite covers its fixed domain cleanly",
              reflection_criterion);
    return failures;
}
