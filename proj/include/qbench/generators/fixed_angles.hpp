#pragma once

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbench/errors.hpp"

namespace qbench {

struct QaoaAngles {
    std::vector<double> gammas;
    std::vector<double> betas;

    int p() const { return static_cast<int>(gammas.size()); }
    void validate() const {
        require(!gammas.empty(), "QAOA needs at least one layer");
        require(gammas.size() == betas.size(), "gamma and beta lists must have equal length");
    }
    friend bool operator==(const QaoaAngles&, const QaoaAngles&) = default;
};

// Degree-specific fixed angles, keyed (degree, p). 3-regular values are the
// published tree-subgraph fixed angles. 4-regular values were fitted by
// tools/fit_fixed_angles.py over random 12-vertex 4-regular graphs.
inline const std::map<std::pair<int, int>, QaoaAngles>& builtin_fixed_angles() {
    static const std::map<std::pair<int, int>, QaoaAngles> table = {
        {{3, 1}, {{0.616}, {0.393}}},
        {{3, 2}, {{0.488, 0.898}, {0.555, 0.293}}},
        {{3, 3}, {{0.422, 0.798, 0.937}, {0.609, 0.459, 0.235}}},
        {{3, 4}, {{0.409, 0.781, 0.988, 1.156}, {0.600, 0.434, 0.297, 0.159}}},
        {{3, 5}, {{0.360, 0.707, 0.823, 1.005, 1.154}, {0.632, 0.523, 0.390, 0.275, 0.149}}},
        {{3, 6}, {{0.331, 0.645, 0.731, 0.837, 1.009, 1.126}, {0.636, 0.534, 0.463, 0.360, 0.259, 0.139}}},
        {{3, 7},
         {{0.310, 0.618, 0.690, 0.751, 0.859, 1.020, 1.122}, {0.648, 0.554, 0.490, 0.445, 0.341, 0.244, 0.131}}},
        {{3, 8},
         {{0.295, 0.587, 0.654, 0.708, 0.765, 0.864, 1.026, 1.116},
          {0.649, 0.555, 0.500, 0.469, 0.420, 0.319, 0.231, 0.123}}},
        {{3, 9},
         {{0.279, 0.566, 0.631, 0.679, 0.726, 0.768, 0.875, 1.037, 1.118},
          {0.654, 0.562, 0.505, 0.475, 0.447, 0.395, 0.300, 0.220, 0.117}}},
        {{3, 10},
         {{0.267, 0.545, 0.610, 0.656, 0.696, 0.729, 0.774, 0.882, 1.044, 1.115},
          {0.656, 0.563, 0.508, 0.484, 0.458, 0.430, 0.373, 0.279, 0.208, 0.111}}},
        {{3, 11},
         {{0.257, 0.528, 0.592, 0.640, 0.677, 0.702, 0.737, 0.777, 0.885, 1.047, 1.115},
          {0.656, 0.563, 0.511, 0.486, 0.467, 0.443, 0.419, 0.357, 0.269, 0.200, 0.105}}},
        {{4, 1}, {{0.5003}, {0.3557}}},
        {{4, 2}, {{0.3857, 0.718}, {0.4927, 0.2808}}},
        {{4, 3}, {{0.344, 0.6333, 0.7711}, {0.5372, 0.4045, 0.2218}}},
        {{4, 4}, {{0.3049, 0.586, 0.69, 0.7847}, {0.5634, 0.4623, 0.3503, 0.1885}}},
        {{4, 5}, {{0.2797, 0.5424, 0.6251, 0.6987, 0.7936}, {0.5732, 0.4779, 0.3991, 0.31, 0.1632}}},
    };
    return table;
}

inline QaoaAngles fixed_angles(int degree, int p) {
    const auto& t = builtin_fixed_angles();
    auto it = t.find({degree, p});
    require(it != t.end(), "no fixed angles for degree " + std::to_string(degree) + ", p=" + std::to_string(p));
    return it->second;
}

inline int max_fixed_angle_depth(int degree) {
    int best = 0;
    for (const auto& [key, _] : builtin_fixed_angles())
        if (key.first == degree) best = std::max(best, key.second);
    return best;
}

// Reads the shipped data file: {"3": {"1": {"gammas": [...], "betas": [...]}, ...}, "4": {...}}.
inline std::map<std::pair<int, int>, QaoaAngles> load_fixed_angles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::map<std::pair<int, int>, QaoaAngles> out;
    try {
        const auto j = nlohmann::json::parse(in);
        for (const auto& [deg, layers] : j.at("angles").items())
            for (const auto& [p, a] : layers.items()) {
                QaoaAngles qa{a.at("gammas").get<std::vector<double>>(), a.at("betas").get<std::vector<double>>()};
                qa.validate();
                require<SchemaError>(qa.p() == std::stoi(p), "layer count does not match key p=" + p);
                out[{std::stoi(deg), std::stoi(p)}] = std::move(qa);
            }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("malformed fixed-angle file " + path + ": " + e.what());
    }
    return out;
}

} // namespace qbench
