#pragma once

// Serialization of bias reports and coefficient dumps.
//
// JSON report schema:
//   {
//     "check_id": string,
//     "verdict": "pass" | "fail" | "exploratory",
//     "range": {"n_min", "n_max", "k_min", "k_max", "t_min", "t_max"},   integers
//     "differences" | "violations" | "exceptions_confirmed" | "observations":
//         [ {"t": int, "k": int, "n": int, "value": integer-or-string} ]
//   }
// "value" is a JSON integer when it fits in 64 bits and a decimal string
// otherwise. CSV output has the header check_id,section,t,k,n,value.

#include <nlohmann/json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bias.hpp"

namespace hookbias {

enum class OutputFormat { Text, Csv, Json };

inline nlohmann::json coeff_to_json(Coeff v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return to_string(v);
}

inline Coeff coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return parse_coeff(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

namespace detail {

inline const std::pair<const char*, std::vector<BiasEntry> BiasReport::*> kReportSections[] = {
    {"differences", &BiasReport::differences},
    {"violations", &BiasReport::violations},
    {"exceptions_confirmed", &BiasReport::exceptions_confirmed},
    {"observations", &BiasReport::observations},
    {"reference_mismatches", &BiasReport::reference_mismatches},
};

inline Verdict parse_verdict(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "exploratory") return Verdict::Exploratory;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const BiasReport& report) {
    nlohmann::json j;
    j["check_id"] = report.check_id;
    j["verdict"] = verdict_name(report.verdict);
    const auto& r = report.range;
    j["range"] = {{"n_min", r.n_min}, {"n_max", r.n_max}, {"k_min", r.k_min},
                  {"k_max", r.k_max}, {"t_min", r.t_min}, {"t_max", r.t_max}};
    for (const auto& [name, member] : detail::kReportSections) {
        auto arr = nlohmann::json::array();
        for (const auto& e : report.*member) {
            arr.push_back({{"t", e.t}, {"k", e.k}, {"n", e.n}, {"value", coeff_to_json(e.value)}});
        }
        j[name] = std::move(arr);
    }
    return j;
}

inline BiasReport report_from_json(const nlohmann::json& j) {
    BiasReport report;
    report.check_id = j.at("check_id").get<std::string>();
    report.verdict = detail::parse_verdict(j.at("verdict").get<std::string>());
    const auto& r = j.at("range");
    report.range = {r.at("n_min").get<int>(), r.at("n_max").get<int>(), r.at("k_min").get<int>(),
                    r.at("k_max").get<int>(), r.at("t_min").get<int>(), r.at("t_max").get<int>()};
    for (const auto& [name, member] : detail::kReportSections) {
        for (const auto& e : j.at(name)) {
            (report.*member)
                .push_back({e.at("t").get<int>(), e.at("k").get<int>(), e.at("n").get<int>(), coeff_from_json(e.at("value"))});
        }
    }
    return report;
}

inline void write_report(std::ostream& out, const BiasReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            out << to_json(report).dump(2) << '\n';
            return;
        case OutputFormat::Csv:
            out << "check_id,section,t,k,n,value\n";
            for (const auto& [name, member] : detail::kReportSections) {
                for (const auto& e : report.*member) {
                    out << report.check_id << ',' << name << ',' << e.t << ',' << e.k << ',' << e.n << ','
                        << to_string(e.value) << '\n';
                }
            }
            return;
        case OutputFormat::Text: {
            const auto& r = report.range;
            out << "check: " << report.check_id << '\n'
                << "range: n " << r.n_min << ".." << r.n_max << ", k " << r.k_min << ".." << r.k_max << ", t "
                << r.t_min << ".." << r.t_max << '\n'
                << "differences: " << report.differences.size() << '\n';
            for (const auto& [name, member] : detail::kReportSections) {
                if (member == &BiasReport::differences) continue;
                const auto& entries = report.*member;
                out << name << ": " << entries.size() << '\n';
                for (const auto& e : entries) {
                    out << "  t=" << e.t << " k=" << e.k << " n=" << e.n << " value=" << to_string(e.value) << '\n';
                }
            }
            out << "verdict: " << verdict_name(report.verdict) << '\n';
            return;
        }
    }
}

/// Dumps coefficients n_from..n_to. Text output is "n value" per line (OEIS
/// b-file layout); CSV has the header "n,value".
template <CoefficientType T>
void write_coefficients(std::ostream& out, const TruncatedSeries<T>& series, int n_from, int n_to, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            auto arr = nlohmann::json::array();
            for (int n = n_from; n <= n_to; ++n) arr.push_back({{"n", n}, {"value", coeff_to_json(series.at(n))}});
            out << arr.dump(2) << '\n';
            return;
        }
        case OutputFormat::Csv:
            out << "n,value\n";
            for (int n = n_from; n <= n_to; ++n) out << n << ',' << to_string(series.at(n)) << '\n';
            return;
        case OutputFormat::Text:
            for (int n = n_from; n <= n_to; ++n) out << n << ' ' << to_string(series.at(n)) << '\n';
            return;
    }
}

}  // namespace hookbias
