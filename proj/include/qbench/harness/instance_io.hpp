#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qbench/errors.hpp"
#include "qbench/generators/chemistry.hpp"
#include "qbench/generators/image.hpp"
#include "qbench/maxcut.hpp"

#ifndef QBENCH_DATA_DIR
#define QBENCH_DATA_DIR "data"
#endif

namespace qbench {

inline std::string data_dir() {
    if (const char* env = std::getenv("QBENCH_DATA_DIR"); env && *env) return env;
    return QBENCH_DATA_DIR;
}

struct ProblemInstanceDoc {
    std::string benchmark_category;
    std::string problem_type;
    std::string instance_name;
    std::vector<std::string> solution_algorithms;
    int num_qubits = 0;
    nlohmann::json data = nlohmann::json::object();

    friend bool operator==(const ProblemInstanceDoc&, const ProblemInstanceDoc&) = default;
};

namespace detail {

inline const nlohmann::json& need(const nlohmann::json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + " is missing required key \"" + key + "\"");
    return j.at(key);
}

} // namespace detail

inline void to_json(nlohmann::json& j, const ProblemInstanceDoc& d) {
    j = nlohmann::json{{"benchmark_category", d.benchmark_category},
                       {"problem_type", d.problem_type},
                       {"instance_name", d.instance_name},
                       {"solution_algorithms", d.solution_algorithms},
                       {"num_qubits", d.num_qubits},
                       {"data", d.data}};
}

inline void from_json(const nlohmann::json& j, ProblemInstanceDoc& d) {
    const std::string where = "instance document";
    try {
        ProblemInstanceDoc r;
        r.benchmark_category = detail::need(j, "benchmark_category", where).get<std::string>();
        r.problem_type = detail::need(j, "problem_type", where).get<std::string>();
        r.instance_name = detail::need(j, "instance_name", where).get<std::string>();
        r.solution_algorithms = detail::need(j, "solution_algorithms", where).get<std::vector<std::string>>();
        r.num_qubits = detail::need(j, "num_qubits", where).get<int>();
        r.data = detail::need(j, "data", where);
        require<SchemaError>(r.data.is_object(), "\"data\" must be an object");
        require<SchemaError>(r.num_qubits >= 1, "\"num_qubits\" must be positive");
        d = std::move(r);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed instance document: ") + e.what());
    }
}

using FamilyPayload = std::variant<ChemInstance, MaxCutInstance, ImageSpec>;

// Validates the family payload and checks num_qubits against it.
inline FamilyPayload decode_payload(const ProblemInstanceDoc& doc, const std::string& base_dir = data_dir()) {
    const auto& d = doc.data;
    try {
        if (doc.benchmark_category == "chemistry") {
            ChemInstance c = chem_instance_from_json(nlohmann::json(doc));
            require<SchemaError>(c.num_qubits == doc.num_qubits, "num_qubits disagrees with the Hamiltonian");
            return c;
        }
        if (doc.benchmark_category == "optimization" && doc.problem_type == "maxcut") {
            MaxCutInstance g;
            g.n = doc.num_qubits;
            g.family = d.value("graph_family", std::string{});
            for (const auto& e : detail::need(d, "edges", "maxcut data"))
                g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.size() > 2 ? e.at(2).get<double>() : 1.0});
            if (d.contains("c_opt")) g.c_opt = d.at("c_opt").get<double>();
            try {
                g.validate();
            } catch (const InvalidArgument& e) {
                throw SchemaError(std::string("maxcut payload: ") + e.what());
            }
            return g;
        }
        if (doc.benchmark_category == "image_loading") {
            ImageSpec img;
            if (d.contains("pixels")) {
                img.M = detail::need(d, "M", "image data").get<int>();
                img.pixels = d.at("pixels").get<std::vector<double>>();
                img.source = doc.instance_name;
            } else {
                std::filesystem::path p = detail::need(d, "path", "image data").get<std::string>();
                if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
                img = load_pgm(p.string());
            }
            img.validate();
            require<SchemaError>(img.num_qubits() == doc.num_qubits, "num_qubits disagrees with the image size");
            return img;
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed payload: ") + e.what());
    }
    throw UnsupportedFamily("unsupported instance family: " + doc.benchmark_category + "/" + doc.problem_type);
}

inline ProblemInstanceDoc load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return j.get<ProblemInstanceDoc>();
}

inline void save_instance(const ProblemInstanceDoc& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write instance file " + path);
    out << nlohmann::json(doc).dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

inline ProblemInstanceDoc maxcut_instance_doc(const MaxCutInstance& g, const std::string& name) {
    g.validate();
    ProblemInstanceDoc d{"optimization", "maxcut", name, {"qaoa"}, g.n, nlohmann::json::object()};
    if (g.family == "fcw") d.solution_algorithms = {"lr-qaoa"};
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.w});
    d.data["edges"] = edges;
    d.data["graph_family"] = g.family;
    if (g.c_opt) d.data["c_opt"] = *g.c_opt;
    return d;
}

inline ProblemInstanceDoc image_instance_doc(const ImageSpec& img, const std::string& name) {
    img.validate();
    ProblemInstanceDoc d{"image_loading", "image_loading", name, {"mps_load"}, img.num_qubits(), nlohmann::json::object()};
    d.data["M"] = img.M;
    d.data["pixels"] = img.pixels;
    return d;
}

} // namespace qbench
