#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/circuit.hpp"
#include "qbench/simulator.hpp"

namespace qbench {

inline const std::vector<double>& default_faa_phases() {
    static const std::vector<double> phases = {-1.44174911, 2.96208034, 3.64950635, 2.62339909, 5.22425252,
                                               5.22425252,  2.62339909, 3.64950635, 2.96208034, -26.57449034};
    return phases;
}

struct FaaSpec {
    int n = 0;
    std::uint64_t target = 0;
    std::vector<double> phases = default_faa_phases();
    int layers = 5;

    void validate() const {
        require(n >= 1, "FAA needs at least one search qubit");
        require(n >= 64 || target < (std::uint64_t{1} << n), "target wider than the search register");
        require(layers >= 1, "FAA needs at least one layer");
        require(static_cast<int>(phases.size()) == 2 * layers,
                "FAA expects " + std::to_string(2 * layers) + " phases, got " + std::to_string(phases.size()));
    }
};

inline int faa_num_qubits(int n) { return n + std::max(0, n - 2); }

// Phase e^{i phi} on |1...1> of qubits 0..n-1. For n >= 3 the AND of the
// first n-1 qubits lands in ancilla n via a v-chain over ancillas n+1...,
// then one CPHASE with the last search qubit.
inline std::vector<Gate> multi_controlled_phase(int n, double phi) {
    if (n == 1) return {Gate::rz(0, phi)};
    if (n == 2) return {Gate::cphase(0, 1, phi)};
    McxLayout lay;
    for (int q = 0; q + 1 < n; ++q) lay.controls.push_back(q);
    lay.target = n;
    for (int a = n + 1; a < faa_num_qubits(n); ++a) lay.ancillas.push_back(a);
    auto compute = decompose_mcx(n - 1, lay);
    std::vector<Gate> out = compute;
    out.push_back(Gate::cphase(n, n - 1, phi));
    auto undo = inverse(compute);
    out.insert(out.end(), undo.begin(), undo.end());
    return out;
}

inline Circuit gen_faa(const FaaSpec& spec) {
    spec.validate();
    const int n = spec.n;
    Circuit c(faa_num_qubits(n));
    std::vector<Gate> flips;
    for (int q = 0; q < n; ++q)
        if (!((spec.target >> q) & 1u)) flips.push_back(Gate::x(q));

    for (int q = 0; q < n; ++q) c.add(Gate::h(q));
    for (int l = 0; l < spec.layers; ++l) {
        // I + (e^{i phi} - 1)|t><t|
        c.add(flips).add(multi_controlled_phase(n, spec.phases[2 * l])).add(flips);
        // I + (e^{i phi} - 1)|+><+| about the uniform state
        for (int q = 0; q < n; ++q) c.add(Gate::h(q));
        for (int q = 0; q < n; ++q) c.add(Gate::x(q));
        c.add(multi_controlled_phase(n, spec.phases[2 * l + 1]));
        for (int q = 0; q < n; ++q) c.add(Gate::x(q));
        for (int q = 0; q < n; ++q) c.add(Gate::h(q));
    }
    c.set_measured(qubit_range(0, n));
    c.metadata()["family"] = "faa";
    c.metadata()["target"] = to_bitstring(spec.target, n);
    return c;
}

// Ideal success probability for the all-zeros target; the construction is
// symmetric under X-conjugation so it serves every target. Cached per
// (n, layers, phases).
inline double faa_p_max(int n, int layers = 5, const std::vector<double>& phases = default_faa_phases()) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<double>>, double> cache;
    const auto key = std::make_tuple(n, layers, phases);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    FaaSpec spec{n, 0, phases, layers};
    const double p = ideal_distribution(gen_faa(spec)).probability(0);
    std::lock_guard lock(mu);
    cache[key] = p;
    return p;
}

} // namespace qbench
