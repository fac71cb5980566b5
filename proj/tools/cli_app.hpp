#pragma once

// Command-line front end. run_cli is separate from main() so the test suite
// can drive every command path in-process.
//
// Exit codes: 0 success / claim holds, 1 violation or golden-data mismatch,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hookbias/hookbias.hpp"

namespace hookbias::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    int truncation = 500;
    OracleGuard guard;
    OutputFormat format = OutputFormat::Text;
    std::string out_path;  // empty: standard output
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Options {
    RunConfig config;
    std::optional<int> n_max;
    std::optional<int> k_max;
    std::optional<int> t;
    std::optional<int> k;
    std::string table;
    std::string check_id;
    std::string scan_id;
    std::string gf_name;
    std::string range;
};

// Canonical ids plus the short aliases accepted on input.
inline const std::map<std::string, std::string, std::less<>> kCheckAliases = {
    {"ordinary-bias", "ordinary-bias"},
    {"thm-1.1", "ordinary-bias"},
    {"odd-hooks-2-vs-1", "odd-hooks-2-vs-1"},
    {"thm-1.4", "odd-hooks-2-vs-1"},
    {"odd-hooks-2-vs-3", "odd-hooks-2-vs-3"},
    {"thm-1.5", "odd-hooks-2-vs-3"},
    {"closed-form-2regular", "closed-form-2regular"},
    {"thm-1.6", "closed-form-2regular"},
    {"closed-form-tregular", "closed-form-tregular"},
    {"thm-1.7", "closed-form-tregular"},
};

inline const std::map<std::string, std::string, std::less<>> kScanAliases = {
    {"conjecture-2regular", "conjecture-2regular"},
    {"conj-1", "conjecture-2regular"},
    {"conjecture-3regular", "conjecture-3regular"},
    {"conj-2", "conjecture-3regular"},
    {"explore", "explore"},
};

inline int series_n_max(const Options& o) {
    const int n = o.n_max.value_or(o.config.truncation);
    if (n < 0) throw UsageError("--nmax must be non-negative");
    if (n > o.config.truncation) {
        throw UsageError("--nmax " + std::to_string(n) + " exceeds --truncation " + std::to_string(o.config.truncation));
    }
    return n;
}

inline int oracle_n_max(const Options& o, int t, int fallback) {
    const int n = o.n_max.value_or(fallback);
    if (n < 0) throw UsageError("--nmax must be non-negative");
    if (n > o.config.guard.limit(t)) {
        throw UsageError("--nmax " + std::to_string(n) + " exceeds the enumeration guard " +
                         std::to_string(o.config.guard.limit(t)));
    }
    return n;
}

inline int positive(std::optional<int> v, int fallback, const char* flag, int min = 1) {
    const int x = v.value_or(fallback);
    if (x < min) throw UsageError(std::string(flag) + " must be at least " + std::to_string(min));
    return x;
}

inline BiasReport run_verify(const Options& o) {
    const auto it = kCheckAliases.find(o.check_id);
    if (it == kCheckAliases.end()) throw UsageError("unknown check id '" + o.check_id + "'");
    const std::string& id = it->second;
    if (id == "ordinary-bias") return verify_ordinary_bias(positive(o.k_max, 50, "--kmax"), series_n_max(o));
    if (id == "odd-hooks-2-vs-1") return verify_2regular_12(series_n_max(o));
    if (id == "odd-hooks-2-vs-3") return verify_2regular_23(series_n_max(o));
    const int k_max = positive(o.k_max, 20, "--kmax");
    if (id == "closed-form-2regular") {
        if (k_max + 2 > o.config.guard.limit(2)) throw UsageError("--kmax exceeds the 2-regular enumeration guard");
        return verify_closed_b2(k_max, o.config.guard);
    }
    if (k_max + 1 > o.config.guard.limit(3)) throw UsageError("--kmax exceeds the enumeration guard");
    return verify_closed_bt(positive(o.t, 6, "--t", 3), k_max, o.config.guard);
}

inline BiasReport run_scan(const Options& o) {
    const auto it = kScanAliases.find(o.scan_id);
    if (it == kScanAliases.end()) throw UsageError("unknown scan id '" + o.scan_id + "'");
    const std::string& id = it->second;
    if (id == "conjecture-2regular") {
        return scan_conjecture_2regular(positive(o.k_max, 30, "--kmax", 3), oracle_n_max(o, 2, 80), o.config.guard);
    }
    if (id == "conjecture-3regular") return scan_conjecture_3regular(series_n_max(o));
    const int t = positive(o.t, 3, "--t", 2);
    return explore_regular_bias(t, positive(o.k_max, 5, "--kmax"), oracle_n_max(o, t, 40), o.config.guard);
}

inline std::pair<int, int> parse_range(const std::string& text, int order) {
    int from = 0;
    int to = 0;
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            from = to = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string a = text.substr(0, dots);
            const std::string b = text.substr(dots + 2);
            from = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(text);
            to = std::stoi(b, &used);
            if (used != b.size()) throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError("malformed range '" + text + "', expected A..B");
    }
    if (from < 0 || to < from || to > order) {
        throw UsageError("range " + text + " must satisfy 0 <= A <= B <= truncation (" + std::to_string(order) + ")");
    }
    return {from, to};
}

inline int run_coeffs(const Options& o, std::ostream& out) {
    const auto tag = parse_gf_name(o.gf_name);
    if (!tag) throw UsageError("unknown generating function '" + o.gf_name + "'");
    const auto& info = gf_info(*tag);
    GfId id{*tag, 0, 0};
    if (info.needs_k) {
        if (!o.k) throw UsageError(std::string(info.name) + " requires --k");
        id.k = positive(o.k, 1, "--k");
    }
    if (info.needs_t) {
        if (!o.t) throw UsageError(std::string(info.name) + " requires --t");
        id.t = positive(o.t, 2, "--t", 2);
    }
    const int order = o.config.truncation;
    const auto [from, to] = parse_range(o.range, order);
    if (*tag == GfTag::P_K_BIVARIATE) {
        // p_(k)(m, n) for every n in range and every m with a nonzero count.
        const auto f = gf_p_k_bivariate(id.k, to);
        std::vector<std::tuple<int, int, Coeff>> rows;
        for (int n = from; n <= to; ++n) {
            for (int m = 0; m <= f.z_degree(); ++m) {
                if (f.coeff(m, n) != 0) rows.emplace_back(n, m, f.coeff(m, n));
            }
        }
        switch (o.config.format) {
            case OutputFormat::Json: {
                auto arr = nlohmann::json::array();
                for (auto [n, m, v] : rows) arr.push_back({{"n", n}, {"m", m}, {"value", coeff_to_json(v)}});
                out << arr.dump(2) << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << "n,m,value\n";
                for (auto [n, m, v] : rows) out << n << ',' << m << ',' << to_string(v) << '\n';
                break;
            case OutputFormat::Text:
                for (auto [n, m, v] : rows) out << n << ' ' << m << ' ' << to_string(v) << '\n';
                break;
        }
        return kExitOk;
    }
    write_coefficients(out, evaluate(id, to), from, to, o.config.format);
    return kExitOk;
}

using Grid = std::array<std::array<std::int64_t, 10>, 10>;

inline Grid compute_table(const std::string& which) {
    Grid grid{};
    if (which == "ordinary") {
        for (int k = 1; k <= 10; ++k) {
            const auto s = gf_p_k(k, 10);
            for (int n = 1; n <= 10; ++n) grid[k - 1][n - 1] = static_cast<std::int64_t>(s[n]);
        }
    } else {
        for (int n = 1; n <= 10; ++n) {
            const auto tally = oracle_tally(n, 2);
            for (int k = 1; k <= 10; ++k) grid[k - 1][n - 1] = tally.count(k);
        }
    }
    return grid;
}

inline int run_tables(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.table != "ordinary" && o.table != "2regular") {
        throw UsageError("unknown table '" + o.table + "', expected ordinary or 2regular");
    }
    const Grid grid = compute_table(o.table);
    const Grid& golden = o.table == "ordinary" ? reference::kOrdinaryTable : reference::kTwoRegularTable;
    const char* label = o.table == "ordinary" ? "p_(%d)" : "b_{2,%d}";
    int mismatches = 0;
    for (int k = 0; k < 10; ++k) {
        for (int n = 0; n < 10; ++n) {
            if (grid[k][n] != golden[k][n]) {
                ++mismatches;
                err << "mismatch at k=" << k + 1 << " n=" << n + 1 << ": computed " << grid[k][n] << ", expected "
                    << golden[k][n] << '\n';
            }
        }
    }
    switch (o.config.format) {
        case OutputFormat::Json: {
            nlohmann::json j;
            j["table"] = o.table;
            j["values"] = grid;
            j["matches_reference"] = mismatches == 0;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "k,n,value\n";
            for (int k = 0; k < 10; ++k) {
                for (int n = 0; n < 10; ++n) out << k + 1 << ',' << n + 1 << ',' << grid[k][n] << '\n';
            }
            break;
        case OutputFormat::Text: {
            out << std::setw(10) << "n ->";
            for (int n = 1; n <= 10; ++n) out << std::setw(5) << n;
            out << '\n';
            for (int k = 0; k < 10; ++k) {
                char name[32];
                std::snprintf(name, sizeof name, label, k + 1);
                out << std::setw(10) << name;
                for (int n = 0; n < 10; ++n) out << std::setw(5) << grid[k][n];
                out << '\n';
            }
            break;
        }
    }
    return mismatches == 0 ? kExitOk : kExitViolation;
}

inline int report_exit(const BiasReport& report) {
    return report.verdict == Verdict::Fail ? kExitViolation : kExitOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Hook-length statistics of ordinary and t-regular partitions", "hookbias"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
    std::string format_name = "text";
    app.add_option("--truncation", o.config.truncation, "Series truncation order N")
        ->check(CLI::Range(0, 100000))
        ->capture_default_str();
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", o.config.out_path, "Write output to PATH instead of stdout");
    app.add_option("--guard-ordinary", o.config.guard.ordinary, "Enumeration limit for ordinary partitions")
        ->capture_default_str();
    app.add_option("--guard-2regular", o.config.guard.two_regular, "Enumeration limit for 2-regular partitions")
        ->capture_default_str();
    app.add_option("--guard-regular", o.config.guard.other_regular, "Enumeration limit for t-regular partitions, t >= 3")
        ->capture_default_str();

    auto add_range_flags = [&](CLI::App* sub) {
        sub->add_option("--nmax", o.n_max, "Largest n checked");
        sub->add_option("--kmax", o.k_max, "Largest k checked");
        sub->add_option("--t", o.t, "Regularity parameter t");
    };

    auto* tables = app.add_subcommand("tables", "Reproduce the 10x10 hook-count tables");
    tables->add_option("which", o.table, "ordinary | 2regular")->required();

    auto* verify = app.add_subcommand("verify", "Run a bias or closed-form verifier");
    verify->add_option("check_id", o.check_id,
                       "ordinary-bias | odd-hooks-2-vs-1 | odd-hooks-2-vs-3 | closed-form-2regular | closed-form-tregular")
        ->required();
    add_range_flags(verify);

    auto* scan = app.add_subcommand("scan", "Scan a conjectured bias");
    scan->add_option("scan_id", o.scan_id, "conjecture-2regular | conjecture-3regular | explore")->required();
    add_range_flags(scan);

    auto* coeffs = app.add_subcommand("coeffs", "Dump generating-function coefficients");
    coeffs->add_option("gf_id", o.gf_name, "Generating function name")->required();
    coeffs->add_option("range", o.range, "A..B or a single index")->required();
    coeffs->add_option("--k", o.k, "Hook length k");
    coeffs->add_option("--t", o.t, "Regularity parameter t");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    o.config.format = formats.at(format_name);

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (*tables) {
            code = detail::run_tables(o, buffer, err);
        } else if (*verify) {
            const auto report = detail::run_verify(o);
            write_report(buffer, report, o.config.format);
            code = detail::report_exit(report);
        } else if (*scan) {
            const auto report = detail::run_scan(o);
            write_report(buffer, report, o.config.format);
            code = detail::report_exit(report);
        } else {
            code = detail::run_coeffs(o, buffer);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (o.config.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.config.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.config.out_path << " for writing\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace hookbias::cli
