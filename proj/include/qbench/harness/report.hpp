#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbench/errors.hpp"

namespace qbench {

struct BenchmarkResult {
    std::string domain;
    std::string problem;
    std::string algorithm;
    int n_qubits = 0;
    int n_circuits = 0;
    long long n_1q = 0;
    long long n_2q = 0;
    std::uint64_t shots = 0; // total over the row's circuits
    std::string backend;
    bool em = false;
    double score = std::numeric_limits<double>::quiet_NaN();
    double exec_time_s = 0.0;
    std::optional<double> energy_kwh;
    // jsonl-only context
    std::string instance;
    int depth = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> error;

    bool ok() const { return !error && std::isfinite(score); }
};

enum class ReportFormat { csv, jsonl, markdown };

inline ReportFormat report_format_from_name(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "jsonl") return ReportFormat::jsonl;
    if (s == "markdown" || s == "md") return ReportFormat::markdown;
    throw InvalidArgument("unknown report format '" + s + "' (csv | jsonl | markdown)");
}

inline constexpr const char* csv_header =
    "domain,problem,algorithm,n_qubits,n_circuits,n_1q,n_2q,shots,backend,em,score,exec_time_s,energy_kwh";

namespace detail {

inline std::string fmt_double(double v, const char* f = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> row_fields(const BenchmarkResult& r) {
    return {r.domain,
            r.problem,
            r.algorithm,
            std::to_string(r.n_qubits),
            std::to_string(r.n_circuits),
            std::to_string(r.n_1q),
            std::to_string(r.n_2q),
            std::to_string(r.shots),
            r.backend,
            r.em ? "Y" : "N",
            fmt_double(r.score),
            fmt_double(r.exec_time_s, "%.6f"),
            r.energy_kwh ? fmt_double(*r.energy_kwh) : std::string{}};
}

} // namespace detail

inline void to_json(nlohmann::json& j, const BenchmarkResult& r) {
    j = nlohmann::json{{"domain", r.domain},       {"problem", r.problem},   {"algorithm", r.algorithm},
                       {"n_qubits", r.n_qubits},   {"n_circuits", r.n_circuits},
                       {"n_1q", r.n_1q},           {"n_2q", r.n_2q},         {"shots", r.shots},
                       {"backend", r.backend},     {"em", r.em},
                       {"score", std::isfinite(r.score) ? nlohmann::json(r.score) : nlohmann::json(nullptr)},
                       {"exec_time_s", r.exec_time_s},
                       {"energy_kwh", r.energy_kwh ? nlohmann::json(*r.energy_kwh) : nlohmann::json(nullptr)},
                       {"instance", r.instance},   {"depth", r.depth},       {"seed", r.seed}};
    if (r.error) j["error"] = *r.error;
}

inline void from_json(const nlohmann::json& j, BenchmarkResult& r) {
    try {
        BenchmarkResult o;
        o.domain = j.at("domain").get<std::string>();
        o.problem = j.at("problem").get<std::string>();
        o.algorithm = j.at("algorithm").get<std::string>();
        o.n_qubits = j.at("n_qubits").get<int>();
        o.n_circuits = j.at("n_circuits").get<int>();
        o.n_1q = j.at("n_1q").get<long long>();
        o.n_2q = j.at("n_2q").get<long long>();
        o.shots = j.at("shots").get<std::uint64_t>();
        o.backend = j.at("backend").get<std::string>();
        o.em = j.at("em").get<bool>();
        if (!j.at("score").is_null()) o.score = j.at("score").get<double>();
        o.exec_time_s = j.at("exec_time_s").get<double>();
        if (j.contains("energy_kwh") && !j.at("energy_kwh").is_null()) o.energy_kwh = j.at("energy_kwh").get<double>();
        o.instance = j.value("instance", std::string{});
        o.depth = j.value("depth", 0);
        o.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("error")) o.error = j.at("error").get<std::string>();
        r = std::move(o);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed result record: ") + e.what());
    }
}

// CSV and markdown carry completed rows only; jsonl keeps error rows too.
inline std::string render_report(const std::vector<BenchmarkResult>& rows, ReportFormat f) {
    require(!rows.empty(), "report needs at least one result");
    std::ostringstream os;
    switch (f) {
    case ReportFormat::csv:
        os << csv_header << '\n';
        for (const auto& r : rows) {
            if (!r.ok()) continue;
            const auto fs = detail::row_fields(r);
            for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << detail::csv_field(fs[i]);
            os << '\n';
        }
        break;
    case ReportFormat::jsonl:
        for (const auto& r : rows) os << nlohmann::json(r).dump() << '\n';
        break;
    case ReportFormat::markdown:
        os << "| Domain | Problem | Algorithm | #q | #qc | #1q | #2q | Shots | Backend | EM? | Score | Exec. Time (s) | "
              "Energy (kWh) |\n";
        os << "|---|---|---|---:|---:|---:|---:|---:|---|---|---:|---:|---:|\n";
        for (const auto& r : rows) {
            if (!r.ok()) continue;
            os << '|';
            for (const auto& s : detail::row_fields(r)) {
                std::string cell = s;
                for (std::size_t p = 0; (p = cell.find('|', p)) != std::string::npos; p += 2) cell.replace(p, 1, "\\|");
                os << ' ' << cell << " |";
            }
            os << '\n';
        }
        break;
    }
    return os.str();
}

inline void emit_report(const std::vector<BenchmarkResult>& rows, ReportFormat f, const std::string& path) {
    const std::string text = render_report(rows, f);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write report to " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

inline std::vector<BenchmarkResult> parse_jsonl(std::istream& in) {
    std::vector<BenchmarkResult> rows;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            rows.push_back(nlohmann::json::parse(line).get<BenchmarkResult>());
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaError("line " + std::to_string(no) + ": " + e.what());
        }
    }
    return rows;
}

inline std::vector<BenchmarkResult> load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_jsonl(in);
}

} // namespace qbench
