#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latcount/closedform.hpp"
#include "latcount/detkernel.hpp"
#include "latcount/errors.hpp"
#include "latcount/exact.hpp"
#include "latcount/families.hpp"
#include "latcount/latticepath.hpp"
#include "latcount/params.hpp"
#include "latcount/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace latcount;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

/// Runs one counting method and reports its wall time on stderr, keeping
/// stdout reserved for the deterministic payload.
template <typename Fn>
BigInt timed(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    BigInt value = fn();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    std::cerr << "# " << name << " " << std::fixed << std::setprecision(3)
              << ms << " ms\n";
    return value;
}

struct EvalArgs {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t u = 0;
    std::int64_t k = 2;
    std::vector<std::string> methods;
    std::string format = "text";
};

int run_eval(const EvalArgs& args) {
    const QueryParams params(args.m, args.n, args.u, args.k);
    const std::int64_t steps = checked::add(args.m, args.n) - args.u - 2;

    bool want_all = args.methods.empty();
    bool want_det = false, want_sum = false, want_dp = false,
         want_brute = false;
    for (const std::string& name : args.methods) {
        if (name == "all")
            want_all = true;
        else if (name == "det")
            want_det = true;
        else if (name == "sum")
            want_sum = true;
        else if (name == "dp")
            want_dp = true;
        else if (name == "brute")
            want_brute = true;
        else {
            std::cerr << "error: unknown method \"" << name
                      << "\" (expected det, sum, dp, brute, or all)\n";
            return kExitUsage;
        }
    }
    if (want_all) {
        want_det = want_sum = want_dp = true;
        if (steps <= kDefaultEnumerationCap) {
            want_brute = true;
        } else {
            std::cerr << "note: brute enumeration skipped (" << steps
                      << " steps exceeds the cap of "
                      << kDefaultEnumerationCap << ")\n";
        }
    }

    std::vector<std::pair<std::string, BigInt>> results;
    if (want_det)
        results.emplace_back("det", timed("det", [&] {
                                 return count_by_determinant(params);
                             }));
    if (want_sum)
        results.emplace_back("sum", timed("sum", [&] {
                                 return count_by_closed_form(params);
                             }));
    if (want_dp)
        results.emplace_back("dp", timed("dp", [&] {
                                 return count_paths_dp(args.u, args.k, args.m,
                                                       args.n)
                                     .at(args.m, args.n);
                             }));
    if (want_brute)
        results.emplace_back("brute", timed("brute", [&] {
                                 const PathQuery q(
                                     Point{args.u + 1, 1},
                                     Point{args.m, args.n},
                                     BoundaryLine::below_shifted(args.k));
                                 return BigInt(enumerate_paths(q).size());
                             }));

    if (args.format == "json") {
        json out;
        out["m"] = args.m;
        out["n"] = args.n;
        out["u"] = args.u;
        out["k"] = args.k;
        out["results"] = json::array();
        for (const auto& [name, value] : results)
            out["results"].push_back({{"method", name},
                                      {"value", value.str()}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, value] : results)
            std::cout << name << " " << value.str() << "\n";
    }

    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].second != results[0].second) {
            std::cerr << "error: methods disagree:";
            for (const auto& [name, value] : results)
                std::cerr << " " << name << "=" << value.str();
            std::cerr << "\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

struct VerifyArgs {
    SweepOptions options;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    const SweepReport report = run_verification_sweep(args.options);
    const SweepOptions& o = report.options;

    if (args.format == "json") {
        json out;
        out["u_max"] = o.u_max;
        out["k_max"] = o.k_max;
        out["n_max"] = o.n_max;
        out["m_extra"] = o.m_extra;
        out["brute_cap"] = o.brute_cap;
        if (o.flip_sum_sign)
            out["sum_sign_flipped"] = true;
        out["instances_checked"] = report.instances_checked;
        out["checks"] = json::object();
        for (const auto& [name, count] : report.checks_run)
            out["checks"][name] = count;
        out["mismatches"] = json::array();
        for (const SweepMismatch& mm : report.mismatches) {
            json entry;
            entry["instance"] = mm.instance;
            entry["check"] = mm.check;
            entry["values"] = json::object();
            for (const auto& [label, value] : mm.values)
                entry["values"][label] = value;
            entry["disagreeing"] = mm.disagreeing;
            out["mismatches"].push_back(std::move(entry));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ranges: u 0.." << o.u_max << ", k 2.." << o.k_max
                  << ", n 2.." << o.n_max << ", m min..min+" << o.m_extra
                  << ", brute cap " << o.brute_cap << "\n";
        if (o.flip_sum_sign)
            std::cout << "sum sign flip injected: yes\n";
        std::cout << "instances checked: " << report.instances_checked
                  << "\n";
        for (const auto& [name, count] : report.checks_run)
            std::cout << "check " << name << ": " << count << "\n";
        std::cout << "mismatches: " << report.mismatches.size() << "\n";
        for (const SweepMismatch& mm : report.mismatches) {
            std::cout << "mismatch " << mm.check << " at " << mm.instance
                      << ":";
            for (const auto& [label, value] : mm.values)
                std::cout << " " << label << "=" << value;
            if (!mm.disagreeing.empty()) {
                std::cout << " (off the majority:";
                for (const std::string& name : mm.disagreeing)
                    std::cout << " " << name;
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }

    if (!report.ok()) {
        const SweepMismatch& first = report.mismatches.front();
        std::cerr << "error: " << report.mismatches.size()
                  << " mismatch(es); first is " << first.check << " at "
                  << first.instance << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

struct SequenceArgs {
    std::string family;
    std::int64_t count = 10;
    std::int64_t k = 0;
    std::int64_t m = 0;
    bool has_k = false;
    bool has_m = false;
};

int run_sequence(const SequenceArgs& args) {
    struct Term {
        BigInt value;
        QueryParams params;
    };
    auto term_for = [&](std::int64_t n) -> Term {
        if (args.family == "catalan")
            return {catalan(n), QueryParams(n + 1, n + 1, 0, 2)};
        if (args.family == "fuss-catalan")
            return {fuss_catalan(n, args.k),
                    QueryParams((args.k - 1) * n + 1, n + 1, 0, args.k)};
        if (args.family == "ballot")
            return {ballot(args.m, n), QueryParams(args.m + 1, n + 1, 0, 2)};
        return {generalized_ballot(args.m, n, args.k),
                QueryParams(args.m + 1, n + 1, 0, args.k + 1)};
    };

    const bool needs_k = args.family == "fuss-catalan" ||
                         args.family == "generalized-ballot";
    const bool needs_m =
        args.family == "ballot" || args.family == "generalized-ballot";
    if (needs_k != args.has_k) {
        std::cerr << "error: family " << args.family
                  << (needs_k ? " requires --k\n" : " does not take --k\n");
        return kExitUsage;
    }
    if (needs_m != args.has_m) {
        std::cerr << "error: family " << args.family
                  << (needs_m ? " requires --m\n" : " does not take --m\n");
        return kExitUsage;
    }

    std::string out;
    for (std::int64_t n = 1; n <= args.count; ++n) {
        const Term term = term_for(n);
        const BigInt cross = count_by_determinant(term.params);
        if (term.value != cross) {
            std::cerr << "error: term " << n << " of " << args.family
                      << " is " << term.value.str()
                      << " but the matrix count gives " << cross.str()
                      << "\n";
            return kExitMismatch;
        }
        out += term.value.str();
        out += "\n";
    }
    std::cout << out;
    return kExitOk;
}

struct TableArgs {
    std::int64_t u = 0;
    std::int64_t k = 2;
    std::int64_t m_max = 0;
    std::int64_t n_max = 0;
    std::string format = "csv";
};

int run_table(const TableArgs& args) {
    const PathCountTable table =
        count_paths_dp(args.u, args.k, args.m_max, args.n_max);

    if (args.format == "json") {
        json out = json::array();
        for (std::int64_t n = 2; n <= args.n_max; ++n) {
            for (std::int64_t m = table.min_m(n); m <= args.m_max; ++m)
                out.push_back({{"m", m},
                               {"n", n},
                               {"count", table.at(m, n).str()}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "m,n,count\n";
        for (std::int64_t n = 2; n <= args.n_max; ++n) {
            for (std::int64_t m = table.min_m(n); m <= args.m_max; ++m)
                std::cout << m << "," << n << ","
                          << table.at(m, n).str() << "\n";
        }
    }
    return kExitOk;
}

struct PathsArgs {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t u = 0;
    std::int64_t k = 2;
    std::int64_t limit = -1;
};

int run_paths(const PathsArgs& args) {
    const QueryParams params(args.m, args.n, args.u, args.k);
    const PathQuery q(Point{args.u + 1, 1}, Point{args.m, args.n},
                      BoundaryLine::below_shifted(args.k));
    const std::vector<LatticePath> paths = enumerate_paths(q);

    std::int64_t shown = 0;
    for (const LatticePath& path : paths) {
        if (args.limit >= 0 && shown >= args.limit)
            break;
        std::cout << path.step_string() << "\n";
        ++shown;
    }
    std::cout << "total " << paths.size() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of monotone lattice paths that stay weakly "
                 "below a rational-slope line, cross-validated by four "
                 "independent methods"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Count one instance by the selected methods and compare");
    eval_cmd->add_option("--m", eval_args.m, "Target column (east extent)")
        ->required();
    eval_cmd->add_option("--n", eval_args.n, "Target row (north extent)")
        ->required();
    eval_cmd->add_option("--u", eval_args.u, "Start column offset")
        ->capture_default_str();
    eval_cmd->add_option("--k", eval_args.k, "Reciprocal of the line slope")
        ->capture_default_str();
    eval_cmd
        ->add_option("--method", eval_args.methods,
                     "Methods to run: det, sum, dp, brute, or all "
                     "(repeatable or comma-separated)")
        ->delimiter(',');
    eval_cmd->add_option("--format", eval_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Cross-check all methods and identities over a range");
    verify_cmd->add_option("--u-max", verify_args.options.u_max,
                           "Largest start offset")
        ->capture_default_str();
    verify_cmd->add_option("--k-max", verify_args.options.k_max,
                           "Largest slope parameter")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_args.options.n_max,
                           "Largest target row")
        ->capture_default_str();
    verify_cmd->add_option("--m-extra", verify_args.options.m_extra,
                           "Columns checked past the smallest valid m")
        ->capture_default_str();
    verify_cmd->add_option("--brute-cap", verify_args.options.brute_cap,
                           "Largest m+n still enumerated exhaustively")
        ->capture_default_str();
    verify_cmd
        ->add_flag("--inject-sum-sign-flip",
                   verify_args.options.flip_sum_sign,
                   "Corrupt the alternating-sum signs (self-test)")
        ->group("");
    verify_cmd->add_option("--format", verify_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SequenceArgs seq_args;
    CLI::App* seq_cmd = app.add_subcommand(
        "sequence", "Print a classical counting sequence, each term "
                    "double-checked against the matrix count");
    seq_cmd->add_option("--family", seq_args.family, "Sequence family")
        ->check(CLI::IsMember(
            {"catalan", "fuss-catalan", "ballot", "generalized-ballot"}))
        ->required();
    seq_cmd->add_option("--count", seq_args.count, "Number of terms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* seq_k =
        seq_cmd->add_option("--k", seq_args.k, "Family parameter k");
    CLI::Option* seq_m =
        seq_cmd->add_option("--m", seq_args.m, "Family parameter m");

    TableArgs table_args;
    CLI::App* table_cmd = app.add_subcommand(
        "table", "Print the full grid of counts up to (m-max, n-max)");
    table_cmd->add_option("--u", table_args.u, "Start column offset")
        ->capture_default_str();
    table_cmd->add_option("--k", table_args.k, "Reciprocal of the line slope")
        ->capture_default_str();
    table_cmd->add_option("--m-max", table_args.m_max, "Largest column")
        ->required();
    table_cmd->add_option("--n-max", table_args.n_max, "Largest row")
        ->required();
    table_cmd->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    PathsArgs paths_args;
    CLI::App* paths_cmd = app.add_subcommand(
        "paths", "List the admissible paths of one instance");
    paths_cmd->add_option("--m", paths_args.m, "Target column")->required();
    paths_cmd->add_option("--n", paths_args.n, "Target row")->required();
    paths_cmd->add_option("--u", paths_args.u, "Start column offset")
        ->capture_default_str();
    paths_cmd->add_option("--k", paths_args.k, "Reciprocal of the line slope")
        ->capture_default_str();
    paths_cmd
        ->add_option("--limit", paths_args.limit,
                     "Print at most this many paths (0: just the total)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    seq_args.has_k = seq_k->count() > 0;
    seq_args.has_m = seq_m->count() > 0;

    try {
        if (*eval_cmd)
            return run_eval(eval_args);
        if (*verify_cmd)
            return run_verify(verify_args);
        if (*seq_cmd)
            return run_sequence(seq_args);
        if (*table_cmd)
            return run_table(table_args);
        if (*paths_cmd)
            return run_paths(paths_args);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegralityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: instance is too large to hold in memory\n";
        return kExitUsage;
    }
    return kExitUsage;
}
