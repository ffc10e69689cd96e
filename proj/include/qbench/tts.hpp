#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qbench/errors.hpp"
#include "qbench/maxcut.hpp"

namespace qbench {

// Counts are doubles so analytic baselines can carry fractional weights.
struct QualityHistogram {
    std::vector<std::pair<double, double>> entries; // (quality, count)
    double t_shot = 1.0;

    double total() const {
        double s = 0.0;
        for (const auto& e : entries) s += e.second;
        return s;
    }
    void validate() const {
        require(t_shot > 0.0 && std::isfinite(t_shot), "t_shot must be positive");
        for (const auto& [q, c] : entries) {
            require(std::isfinite(q), "quality must be finite");
            require(c > 0.0 && std::isfinite(c), "counts must be positive");
        }
    }
};

inline void to_json(nlohmann::json& j, const QualityHistogram& h) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [q, c] : h.entries) e.push_back({q, c});
    j = nlohmann::json{{"t_shot_s", h.t_shot}, {"entries", e}};
}

inline void from_json(const nlohmann::json& j, QualityHistogram& h) {
    try {
        QualityHistogram r;
        r.t_shot = j.at("t_shot_s").get<double>();
        for (const auto& e : j.at("entries")) r.entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        r.validate();
        h = std::move(r);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed quality histogram: ") + e.what());
    }
}

inline double success_prob(const QualityHistogram& h, double threshold) {
    const double tot = h.total();
    require(tot > 0.0, "empty quality histogram");
    double hit = 0.0;
    for (const auto& [q, c] : h.entries)
        if (q >= threshold) hit += c;
    return hit / tot;
}

inline double tts_expectation(double q_hat, double t_shot) {
    require(t_shot > 0.0, "t_shot must be positive");
    require(q_hat >= 0.0 && q_hat <= 1.0, "success probability must lie in [0,1]");
    if (q_hat == 0.0) return std::numeric_limits<double>::infinity();
    return t_shot / q_hat;
}

// At q = 1 a single shot suffices, so the singular formula is replaced by t_shot.
inline double tts_confidence(double q_hat, double t_shot, double c = 0.99) {
    require(c > 0.0 && c < 1.0, "confidence must lie in (0, 1)");
    require(t_shot > 0.0, "t_shot must be positive");
    require(q_hat >= 0.0 && q_hat <= 1.0, "success probability must lie in [0,1]");
    if (q_hat == 0.0) return std::numeric_limits<double>::infinity();
    if (q_hat == 1.0) return t_shot;
    return t_shot * std::log1p(-c) / std::log1p(-q_hat);
}

struct TtsCurve {
    std::vector<double> thresholds;
    std::vector<double> tts_seconds;
};

inline TtsCurve tts_curve(const QualityHistogram& h, std::vector<double> thresholds, double c = 0.99) {
    std::sort(thresholds.begin(), thresholds.end());
    TtsCurve out{thresholds, {}};
    for (double p : thresholds) out.tts_seconds.push_back(tts_confidence(success_prob(h, p), h.t_shot, c));
    return out;
}

inline QualityHistogram exact_random_ar_distribution(const MaxCutInstance& g, double t_shot = 445e-6) {
    g.validate();
    require<ResourceLimit>(g.n <= max_exhaustive_vertices,
                           "exhaustive enumeration is capped at " + std::to_string(max_exhaustive_vertices) + " vertices");
    const double copt = max_cut_exact(g);
    require(copt > 0.0, "optimal cut must be positive");
    std::map<double, double> tally;
    // Each bipartition is two assignments (x and its complement).
    detail::for_each_bipartition(g, [&](std::uint64_t, double cut) { tally[cut] += 2.0; });
    QualityHistogram h;
    h.t_shot = t_shot;
    for (const auto& [cut, n] : tally) h.entries.emplace_back(cut / copt, n);
    return h;
}

// Quality 1 - d/n with weight C(n, d), total 2^n.
inline QualityHistogram binomial_hamming_baseline(int n, double t_shot = 1.0) {
    require(n >= 1, "binomial baseline needs n >= 1");
    QualityHistogram h;
    h.t_shot = t_shot;
    double binom = 1.0;
    for (int d = 0; d <= n; ++d) {
        h.entries.emplace_back(1.0 - static_cast<double>(d) / n, binom);
        binom = binom * (n - d) / (d + 1);
    }
    return h;
}

struct TtsFit {
    double a = 0.0, b = 0.0, c = 0.0;
    double operator()(double x) const { return std::exp(a * x * x + b * x + c); }
};

// Least squares of ln TTS on [x^2, x, 1]. Points with infinite TTS are
// dropped; non-positive TTS is an error.
inline TtsFit fit_tts_extrapolation(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> use;
    for (const auto& [x, t] : points) {
        require(!(t <= 0.0), "TTS values must be positive");
        if (std::isfinite(t) && std::isfinite(x)) use.emplace_back(x, t);
    }
    std::sort(use.begin(), use.end());
    int distinct = 0;
    for (std::size_t i = 0; i < use.size(); ++i)
        if (i == 0 || use[i].first != use[i - 1].first) ++distinct;
    require(distinct >= 3, "TTS fit needs at least three points with distinct thresholds");
    Eigen::MatrixXd A(static_cast<Eigen::Index>(use.size()), 3);
    Eigen::VectorXd y(static_cast<Eigen::Index>(use.size()));
    for (std::size_t i = 0; i < use.size(); ++i) {
        const double x = use[i].first;
        A.row(static_cast<Eigen::Index>(i)) << x * x, x, 1.0;
        y(static_cast<Eigen::Index>(i)) = std::log(use[i].second);
    }
    const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(y);
    return {coef(0), coef(1), coef(2)};
}

} // namespace qbench
