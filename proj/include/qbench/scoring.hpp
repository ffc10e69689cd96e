#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/errors.hpp"
#include "qbench/generators/chemistry.hpp"
#include "qbench/generators/image.hpp"
#include "qbench/maxcut.hpp"
#include "qbench/simulator.hpp"

namespace qbench {

struct Score {
    double value = 0.0;
    std::string family;
    std::optional<bool> passed;
    std::optional<double> unclamped; // FAA reports the raw ratio alongside
};

inline Score approximation_ratio(const ShotHistogram& h, const MaxCutInstance& g) {
    require(h.shots() > 0, "approximation ratio of an empty histogram");
    require(h.num_bits() == g.n, "histogram width does not match the vertex count");
    const double copt = max_cut_exact(g);
    require(copt > 0.0, "optimal cut must be positive");
    long double total = 0.0;
    for (const auto& [x, n] : h.counts()) total += static_cast<long double>(cut_value(g, x)) * n;
    return {static_cast<double>(total / h.shots()) / copt, "maxcut", std::nullopt, std::nullopt};
}

// Exact expectation for an ideal distribution; same quantity without shot noise.
inline double expected_approximation_ratio(const OutcomeDistribution& d, const MaxCutInstance& g) {
    const double copt = max_cut_exact(g);
    require(copt > 0.0, "optimal cut must be positive");
    double s = 0.0;
    for (const auto& [x, p] : d.entries()) s += p * cut_value(g, x);
    return s / copt;
}

inline double best_shot_ratio(const ShotHistogram& h, const MaxCutInstance& g) {
    require(h.shots() > 0, "empty histogram");
    double best = 0.0;
    for (const auto& [x, n] : h.counts()) best = std::max(best, cut_value(g, x));
    return best / max_cut_exact(g);
}

struct RandomBaseline {
    double mu = 0.0;
    double sigma = 0.0;
    double ar_rand = 0.0;
};

// Batch AR of uniform random bitstrings; sigma is the sample standard
// deviation across batches.
inline RandomBaseline random_baseline(const MaxCutInstance& g, std::uint64_t shots, int batches, std::uint64_t seed) {
    require(batches >= 2, "random baseline needs at least two batches");
    require(shots >= 1, "random baseline needs at least one shot per batch");
    require(g.n <= 64, "random baseline supports up to 64 vertices");
    const double copt = max_cut_exact(g);
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    std::vector<double> ars;
    for (int b = 0; b < batches; ++b) {
        double s = 0.0;
        for (std::uint64_t k = 0; k < shots; ++k) s += cut_value(g, rng() & mask);
        ars.push_back(s / static_cast<double>(shots) / copt);
    }
    double mu = 0.0;
    for (double a : ars) mu += a;
    mu /= batches;
    double var = 0.0;
    for (double a : ars) var += (a - mu) * (a - mu);
    const double sigma = std::sqrt(var / (batches - 1));
    return {mu, sigma, mu + 3.0 * sigma};
}

inline Score ar_eff(const std::vector<double>& ar_by_depth, double ar_rand) {
    require(!ar_by_depth.empty(), "ar_eff needs at least one depth");
    require(ar_rand < 1.0, "random threshold must be below 1");
    const double best = *std::max_element(ar_by_depth.begin(), ar_by_depth.end());
    const double v = (best - ar_rand) / (1.0 - ar_rand);
    return {v, "lr_qaoa", v >= 0.0, std::nullopt};
}

inline Score faa_score(const ShotHistogram& h, std::uint64_t target, double p_max) {
    require(p_max > 0.0 && p_max <= 1.0, "p_max must lie in (0, 1]");
    require(h.shots() > 0, "empty histogram");
    const double raw = static_cast<double>(h.count(target)) / static_cast<double>(h.shots()) / p_max;
    return {std::clamp(raw, 0.0, 1.0), "faa", std::nullopt, raw};
}

inline Score hidden_shift_score(const ShotHistogram& h, std::uint64_t shift) {
    require(h.shots() > 0, "empty histogram");
    return {static_cast<double>(h.count(shift)) / static_cast<double>(h.shots()), "hidden_shift", std::nullopt,
            std::nullopt};
}

inline Score hidden_shift_score(const std::vector<ShotHistogram>& hs, const std::vector<std::uint64_t>& shifts) {
    require(!hs.empty() && hs.size() == shifts.size(), "one shift per histogram");
    double s = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) s += hidden_shift_score(hs[i], shifts[i]).value;
    return {s / static_cast<double>(hs.size()), "hidden_shift", std::nullopt, std::nullopt};
}

inline Score mse_score(const OutcomeDistribution& d, const ImageSpec& img) {
    const auto x = img.normalized();
    require(d.num_bits() == img.num_qubits(), "outcome space does not match the pixel count");
    double s = 0.0;
    std::size_t next = 0;
    for (const auto& [idx, p] : d.entries()) {
        for (; next < idx; ++next) s += x[next] * x[next];
        const double diff = std::sqrt(p) - x[idx];
        s += diff * diff;
        next = idx + 1;
    }
    for (; next < x.size(); ++next) s += x[next] * x[next];
    return {s, "image_loading", s < 0.1, std::nullopt};
}

inline Score mse_score(const ShotHistogram& h, const ImageSpec& img) {
    require(h.shots() > 0, "empty histogram");
    return mse_score(h.normalized(), img);
}

namespace detail {

// Mean of prod_{i in support} (-1)^{bit_i}; support from the Pauli string.
inline double parity_expectation(const OutcomeDistribution& d, const std::string& pauli) {
    const int n = static_cast<int>(pauli.size());
    std::uint64_t mask = 0;
    for (int k = 0; k < n; ++k)
        if (pauli[static_cast<std::size_t>(k)] != 'I') mask |= std::uint64_t{1} << (n - 1 - k);
    double s = 0.0;
    for (const auto& [x, p] : d.entries()) s += popcount_parity(x & mask) ? -p : p;
    return s;
}

} // namespace detail

struct ChemEnergy {
    double energy = 0.0;
    Score score;
};

inline ChemEnergy chem_energy(const ChemInstance& inst, const OutcomeDistribution& z, const OutcomeDistribution& x,
                              const OutcomeDistribution& y) {
    inst.validate();
    for (const auto* d : {&z, &x, &y})
        require(d->num_bits() == inst.num_qubits, "histogram width does not match the instance");
    double e = 0.0;
    for (const auto& t : inst.paired_hamiltonian) {
        const bool has_x = t.pauli.find('X') != std::string::npos;
        const bool has_y = t.pauli.find('Y') != std::string::npos;
        const OutcomeDistribution& d = has_x ? x : has_y ? y : z;
        e += t.coeff * detail::parity_expectation(d, t.pauli);
    }
    const double err = std::abs(e - inst.reference_energy_doci);
    return {e, {err, "chemistry", err <= 0.0016, std::nullopt}};
}

inline ChemEnergy chem_energy(const ChemInstance& inst, const ShotHistogram& z, const ShotHistogram& x,
                              const ShotHistogram& y) {
    require(!z.empty() && !x.empty() && !y.empty(), "empty histogram");
    return chem_energy(inst, z.normalized(), x.normalized(), y.normalized());
}

// Groups of m bits, left to right, each read as j / 2^m.
inline std::vector<double> bits_to_copula(const std::string& bits, int m_bits, int n_vars) {
    require(m_bits >= 1 && n_vars >= 1, "m_bits and n_vars must be positive");
    require(static_cast<int>(bits.size()) == m_bits * n_vars, "bitstring length must be m_bits * n_vars");
    std::vector<double> u;
    for (int v = 0; v < n_vars; ++v) {
        const auto j = from_bitstring(std::string_view(bits).substr(static_cast<std::size_t>(v * m_bits),
                                                                    static_cast<std::size_t>(m_bits)));
        u.push_back(std::ldexp(static_cast<double>(j), -m_bits));
    }
    return u;
}

using Sample = std::vector<double>;

// Biased (V-statistic) estimator with the Gaussian kernel exp(-|x-y|^2 / 2 sigma^2).
inline double mmd(const std::vector<Sample>& xs, const std::vector<Sample>& ys, double sigma = 1.0) {
    require(!xs.empty() && !ys.empty(), "MMD needs non-empty sample sets");
    require(sigma > 0.0, "kernel width must be positive");
    const std::size_t dim = xs.front().size();
    for (const auto* set : {&xs, &ys})
        for (const auto& s : *set) require(s.size() == dim, "samples must share one dimension");
    const double inv = 1.0 / (2.0 * sigma * sigma);
    auto mean_kernel = [&](const std::vector<Sample>& a, const std::vector<Sample>& b) {
        double s = 0.0;
        for (const auto& u : a)
            for (const auto& v : b) {
                double d2 = 0.0;
                for (std::size_t k = 0; k < dim; ++k) d2 += (u[k] - v[k]) * (u[k] - v[k]);
                s += std::exp(-d2 * inv);
            }
        return s / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
    };
    const double v = mean_kernel(xs, xs) + mean_kernel(ys, ys) - 2.0 * mean_kernel(xs, ys);
    return std::max(0.0, v);
}

// Order statistic at rank ceil(alpha N), no interpolation.
inline double value_at_risk(std::vector<double> losses, double alpha = 0.95) {
    require(!losses.empty(), "VaR needs at least one loss");
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    std::sort(losses.begin(), losses.end());
    const double n = static_cast<double>(losses.size());
    auto rank = static_cast<std::size_t>(std::ceil(alpha * n - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, losses.size());
    return losses[rank - 1];
}

inline Score var_score(const std::vector<double>& model, const std::vector<double>& ref, double alpha = 0.95) {
    const double vr = value_at_risk(ref, alpha);
    require<DegenerateInput>(vr != 0.0, "reference VaR is zero");
    const double r = std::abs(value_at_risk(model, alpha) / vr);
    const double v = r == 0.0 ? 0.0 : std::min(r, 1.0 / r);
    return {v, "copula", std::nullopt, std::nullopt};
}

} // namespace qbench
