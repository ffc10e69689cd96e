#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/circuit.hpp"
#include "qbench/simulator.hpp"

namespace qbench {

struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    std::uint64_t seed = 0;

    void validate() const {
        require(std::isfinite(p1) && p1 >= 0.0 && p1 <= 1.0, "p1 must lie in [0,1]");
        require(std::isfinite(p2) && p2 >= 0.0 && p2 <= 1.0, "p2 must lie in [0,1]");
    }
};

namespace detail {

struct FaultSite {
    std::size_t after_gate;
    int a;
    int b; // -1 for a one-qubit site
};

// One site per 1q/2q gate. Gates on three or more qubits get as many sites
// as their census says: 2q sites on (control i mod k, target), 1q sites
// cycling over the support.
inline std::vector<FaultSite> fault_sites(const Circuit& c) {
    std::vector<FaultSite> out;
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate& g = c.gates()[i];
        if (g.qubits.size() == 1) {
            out.push_back({i, g.qubits[0], -1});
        } else if (g.qubits.size() == 2) {
            out.push_back({i, g.qubits[0], g.qubits[1]});
        } else {
            const GateCensus cen = gate_census(g);
            const auto ctrls = g.controls();
            for (long long k = 0; k < cen.n_2q; ++k)
                out.push_back({i, ctrls[static_cast<std::size_t>(k) % ctrls.size()], g.target()});
            for (long long k = 0; k < cen.n_1q; ++k)
                out.push_back({i, g.qubits[static_cast<std::size_t>(k) % g.qubits.size()], -1});
        }
    }
    return out;
}

struct FaultEvent {
    std::size_t site;
    int pauli; // 1..3 for one qubit, 1..15 for two (a gets pauli % 4, b gets pauli / 4)
};

} // namespace detail

// Monte Carlo trajectories of per-gate depolarizing noise. Error patterns are
// drawn first; error-free shots are sampled from the ideal distribution with
// nm.seed, so p1 = p2 = 0 reproduces sample(ideal, shots, nm.seed) exactly.
inline ShotHistogram simulate_noisy(const Circuit& c, const NoiseModel& nm, std::uint64_t shots,
                                    int cap = default_qubit_cap()) {
    nm.validate();
    require(shots >= 1, "simulate_noisy needs at least one shot");
    const StateVector ideal = simulate(c, cap);
    const std::vector<int> measured = c.measured();
    const OutcomeDistribution ideal_dist = exact_distribution(ideal, measured);

    const auto sites = detail::fault_sites(c);
    std::mt19937_64 fault_rng(mix_seed(nm.seed, 1));
    std::mt19937_64 readout_rng(mix_seed(nm.seed, 2));

    std::uint64_t clean = 0;
    ShotHistogram hist(c.num_measured());
    std::vector<detail::FaultEvent> events;
    for (std::uint64_t s = 0; s < shots; ++s) {
        events.clear();
        if (nm.p1 > 0.0 || nm.p2 > 0.0) {
            for (std::size_t k = 0; k < sites.size(); ++k) {
                const bool two = sites[k].b >= 0;
                const double p = two ? nm.p2 : nm.p1;
                if (p > 0.0 && uniform01(fault_rng) < p)
                    events.push_back({k, 1 + static_cast<int>(uniform_below(fault_rng, two ? 15 : 3))});
            }
        }
        if (events.empty()) {
            ++clean;
            continue;
        }
        StateVector psi(c.num_qubits(), cap);
        std::size_t ev = 0;
        for (std::size_t gi = 0; gi < c.gates().size(); ++gi) {
            psi.apply(c.gates()[gi]);
            for (; ev < events.size() && sites[events[ev].site].after_gate == gi; ++ev) {
                const auto& site = sites[events[ev].site];
                if (site.b < 0) {
                    psi.apply_pauli(site.a, events[ev].pauli);
                } else {
                    psi.apply_pauli(site.a, events[ev].pauli % 4);
                    psi.apply_pauli(site.b, events[ev].pauli / 4);
                }
            }
        }
        const double u = uniform01(readout_rng) * psi.norm_squared();
        double acc = 0.0;
        std::size_t idx = psi.dim() - 1;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            acc += std::norm(psi[i]);
            if (u < acc) {
                idx = i;
                break;
            }
        }
        hist.add(extract_bits(idx, measured));
    }
    if (clean > 0) hist.merge(sample(ideal_dist, clean, nm.seed));
    return hist;
}

} // namespace qbench
