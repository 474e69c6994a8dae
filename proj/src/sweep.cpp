#include "latcount/sweep.hpp"

#include <algorithm>
#include <cstddef>

#include "latcount/closedform.hpp"
#include "latcount/detkernel.hpp"
#include "latcount/errors.hpp"
#include "latcount/exact.hpp"
#include "latcount/latticepath.hpp"
#include "latcount/params.hpp"

namespace latcount {

namespace {

std::string instance_tag(const QueryParams& p) {
    return "m=" + std::to_string(p.m()) + " n=" + std::to_string(p.n()) +
           " u=" + std::to_string(p.u()) + " k=" + std::to_string(p.k());
}

void note(SweepReport& report, const std::string& check) {
    ++report.checks_run[check];
}

void record(SweepReport& report, std::string instance, std::string check,
            std::vector<std::pair<std::string, std::string>> values,
            std::vector<std::string> disagreeing = {}) {
    report.mismatches.push_back(SweepMismatch{std::move(instance),
                                              std::move(check),
                                              std::move(values),
                                              std::move(disagreeing)});
}

/// Compares named values and, on disagreement, reports the methods that are
/// off the majority; ties go to the earliest method.
void check_agreement(SweepReport& report, const std::string& instance,
                     const std::string& check,
                     const std::vector<std::pair<std::string, BigInt>>& got) {
    note(report, check);
    bool all_equal = true;
    for (std::size_t i = 1; i < got.size(); ++i) {
        if (got[i].second != got[0].second) {
            all_equal = false;
            break;
        }
    }
    if (all_equal)
        return;

    std::size_t majority = 0;
    std::size_t majority_votes = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        std::size_t votes = 0;
        for (const auto& other : got) {
            if (other.second == got[i].second)
                ++votes;
        }
        if (votes > majority_votes) {
            majority_votes = votes;
            majority = i;
        }
    }

    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> disagreeing;
    for (const auto& [method, value] : got) {
        values.emplace_back(method, value.str());
        if (value != got[majority].second)
            disagreeing.push_back(method);
    }
    record(report, instance, check, std::move(values), std::move(disagreeing));
}

void check_instance(SweepReport& report, const SweepOptions& opts,
                    const QueryParams& p, const PathCountTable& table) {
    const std::int64_t m = p.m();
    const std::int64_t n = p.n();
    const std::int64_t u = p.u();
    const std::int64_t k = p.k();
    const std::string tag = instance_tag(p);

    const BigInt det = count_by_determinant(p);
    const BigInt sum = opts.flip_sum_sign
                           ? detail::count_by_closed_form_sign_flipped(p)
                           : count_by_closed_form(p);
    const BigInt dp = table.at(m, n);

    const bool within_brute = m + n <= opts.brute_cap;
    std::vector<LatticePath> paths;
    if (within_brute) {
        const PathQuery q(Point{u + 1, 1}, Point{m, n},
                          BoundaryLine::below_shifted(k));
        paths = enumerate_paths(q, opts.brute_cap);
    }

    std::vector<std::pair<std::string, BigInt>> got = {
        {"det", det}, {"sum", sum}, {"dp", dp}};
    if (within_brute)
        got.emplace_back("brute", BigInt(paths.size()));
    check_agreement(report, tag, "four_way", got);

    if (n >= 3 && m >= std::max(u + 2, (k - 1) * (n - 1) + 1)) {
        note(report, "recurrence");
        const BigInt left = count_by_determinant(QueryParams(m - 1, n, u, k));
        const BigInt up = count_by_determinant(QueryParams(m, n - 1, u, k));
        if (det != left + up) {
            record(report, tag, "recurrence",
                   {{"count", det.str()},
                    {"previous_column", left.str()},
                    {"previous_row", up.str()}});
        }
    }

    if (n == 2 && m >= std::max(u + 2, k)) {
        note(report, "row_two_formula");
        const BigInt want = m - std::max(u, k - 1);
        if (det != want) {
            record(report, tag, "row_two_formula",
                   {{"count", det.str()}, {"formula", want.str()}});
        }
    }

    if (m == u + 1 && u >= k - 1 && n <= u / (k - 1) + 1) {
        note(report, "unit_triangular");
        const BinomialMatrix mat = build_matrix(p);
        bool shape_ok = true;
        for (std::int64_t i = 1; i <= mat.order() && shape_ok; ++i) {
            for (std::int64_t j = 1; j <= mat.order() && shape_ok; ++j) {
                if (j > i)
                    shape_ok = mat.at(i, j) == 0;
                else if (j == i)
                    shape_ok = mat.at(i, j) == 1;
            }
        }
        if (!shape_ok || det != 1) {
            record(report, tag, "unit_triangular",
                   {{"count", det.str()},
                    {"triangular", shape_ok ? "yes" : "no"}});
        }
    }

    if (m == (k - 1) * (n - 1)) {
        note(report, "vanishing_column");
        const BinomialMatrix mat = build_matrix(p);
        bool column_zero = true;
        for (std::int64_t i = 1; i <= mat.order(); ++i) {
            if (mat.at(i, mat.order()) != 0) {
                column_zero = false;
                break;
            }
        }
        if (!column_zero || det != 0) {
            record(report, tag, "vanishing_column",
                   {{"count", det.str()},
                    {"last_column_zero", column_zero ? "yes" : "no"}});
        }
    }

    if (n >= 3) {
        note(report, "bottom_row");
        if (!check_bottom_row(p)) {
            record(report, tag, "bottom_row",
                   {{"bottom_row_matches", "no"}});
        }
        note(report, "column_split");
        if (!check_column_decomposition(p)) {
            record(report, tag, "column_split",
                   {{"decomposition_holds", "no"}});
        }
    }

    if (m >= (k - 1) * (n - 1) + 1) {
        const BigInt below =
            count_below_line(BelowLineQuery(u, 0, m - 1, n - 1, k - 1));
        check_agreement(report, tag, "substitution",
                        {{"sum", sum}, {"shifted_below_line", below}});
    }

    if (n == 2 && u < k - 1 && m > u + 1 && within_brute) {
        note(report, "forced_prefix");
        const std::int64_t forced = k - 1 - u;
        for (const LatticePath& path : paths) {
            const auto& steps = path.steps();
            bool ok = std::int64_t(steps.size()) >= forced;
            for (std::int64_t t = 0; ok && t < forced; ++t)
                ok = steps[static_cast<std::size_t>(t)] == Step::E;
            if (!ok) {
                record(report, tag, "forced_prefix",
                       {{"path", path.step_string()},
                        {"forced_east_steps", std::to_string(forced)}});
                break;
            }
        }
    }
}

/// Counts of constrained paths agree with both alternating sums and survive
/// the diagonal flip onto the mirrored constraint.
void check_reflection_suite(SweepReport& report) {
    constexpr std::int64_t coord_cap = 12;
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t m = 0; m <= coord_cap; ++m) {
            for (std::int64_t n = k * m; n + m <= coord_cap; ++n) {
                for (std::int64_t a = 0; a <= m; ++a) {
                    for (std::int64_t b = k * a; b <= n; ++b) {
                        const std::string tag =
                            "above a=" + std::to_string(a) +
                            " b=" + std::to_string(b) +
                            " m=" + std::to_string(m) +
                            " n=" + std::to_string(n) +
                            " k=" + std::to_string(k);
                        const AboveLineQuery above(a, b, m, n, k);
                        const BigInt closed = count_above_line(above);

                        const PathQuery q(Point{a, b}, Point{m, n},
                                          BoundaryLine::above_origin(k));
                        const auto paths = enumerate_paths(q);

                        std::vector<std::pair<std::string, BigInt>> got = {
                            {"above_closed_form", closed},
                            {"above_enumeration", BigInt(paths.size())}};

                        bool mirror_ok = true;
                        if (m >= 1) {
                            const BelowLineQuery mirrored(b, a, n, m, k);
                            got.emplace_back("mirrored_closed_form",
                                             count_below_line(mirrored));
                            const PathQuery mq(Point{b, a}, Point{n, m},
                                               BoundaryLine::below_origin(k));
                            got.emplace_back(
                                "mirrored_enumeration",
                                BigInt(enumerate_paths(mq).size()));

                            const BoundaryLine mirror_line =
                                BoundaryLine::below_origin(k);
                            for (const LatticePath& path : paths) {
                                const LatticePath flipped =
                                    reflect_path(path);
                                if (!path_satisfies(flipped, mirror_line) ||
                                    !(flipped.end() == Point{n, m})) {
                                    mirror_ok = false;
                                    break;
                                }
                            }
                        }
                        check_agreement(report, tag, "reflection", got);
                        if (!mirror_ok) {
                            record(report, tag, "reflection",
                                   {{"flipped_path_admitted", "no"}});
                        }
                    }
                }
            }
        }
    }
}

} // namespace

SweepReport run_verification_sweep(const SweepOptions& opts) {
    if (opts.u_max < 0)
        throw DomainError("u_max must be >= 0 (got " +
                          std::to_string(opts.u_max) + ")");
    if (opts.k_max < 2)
        throw DomainError("k_max must be >= 2 (got " +
                          std::to_string(opts.k_max) + ")");
    if (opts.n_max < 2)
        throw DomainError("n_max must be >= 2 (got " +
                          std::to_string(opts.n_max) + ")");
    if (opts.m_extra < 0)
        throw DomainError("m_extra must be >= 0 (got " +
                          std::to_string(opts.m_extra) + ")");
    if (opts.brute_cap < 0)
        throw DomainError("brute_cap must be >= 0 (got " +
                          std::to_string(opts.brute_cap) + ")");

    SweepReport report;
    report.options = opts;

    for (std::int64_t u = 0; u <= opts.u_max; ++u) {
        for (std::int64_t k = 2; k <= opts.k_max; ++k) {
            const std::int64_t m_hi =
                checked::add(QueryParams::min_m_for(opts.n_max, u, k),
                             opts.m_extra);
            const PathCountTable table =
                count_paths_dp(u, k, m_hi, opts.n_max);
            for (std::int64_t n = 2; n <= opts.n_max; ++n) {
                const std::int64_t lo = QueryParams::min_m_for(n, u, k);
                for (std::int64_t m = lo; m <= lo + opts.m_extra; ++m) {
                    const QueryParams p(m, n, u, k);
                    check_instance(report, opts, p, table);
                    ++report.instances_checked;
                }
            }
        }
    }

    check_reflection_suite(report);
    return report;
}

} // namespace latcount
