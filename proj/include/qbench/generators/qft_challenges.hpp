#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/simulator.hpp"

namespace qbench {

struct Challenge {
    Circuit circuit;
    OutcomeDistribution reference;
};

inline std::int64_t default_cosine_frequency(int n) { return (std::int64_t{1} << n) / 2 - 1; }

// State loading for the cosine challenge: (|N-2s-1> + |N-1>)/sqrt2, then a
// QFT and the phases that add s+1. The result is the Fourier transform of
// (|s> + |N-s>)/sqrt2, amplitudes proportional to cos(2 pi k s / N).
inline Circuit cosine_qft_loading(int n, std::int64_t s) {
    require(n >= 3, "cosine challenge needs n >= 3");
    const std::int64_t N = std::int64_t{1} << n;
    require(4 * s > N && 2 * s < N, "cosine frequency must satisfy N/4 < s < N/2");
    const int msb = n - 1;
    const auto qs = qubit_range(0, n);
    Circuit c(n);
    c.add(Gate::h(msb));
    for (int q = 0; q < msb; ++q) c.add(Gate::cx(msb, q));
    // X controlled on the MSB being 0: maps |0> to |N-2s-1> and fixes |N-1>.
    const std::uint64_t low = static_cast<std::uint64_t>(N - 2 * s - 1);
    for (int b = 0; b < msb; ++b)
        if ((low >> b) & 1u) c.add(Gate::x(b)).add(Gate::cx(msb, b));
    c.add(qft_gates(qs));
    c.add(phase_add_gates(qs, s + 1));
    return c;
}

inline Challenge gen_cosine_qft(int n, std::int64_t s) {
    Circuit c = cosine_qft_loading(n, s);
    c.add(qft_gates(qubit_range(0, n)));
    c.metadata()["family"] = "cosine_qft";
    c.metadata()["s"] = std::to_string(s);
    const std::int64_t N = std::int64_t{1} << n;
    OutcomeDistribution ref(n, {{static_cast<std::uint64_t>(s), 0.5}, {static_cast<std::uint64_t>(N - s), 0.5}});
    return {std::move(c), std::move(ref)};
}

inline OutcomeDistribution hidden_phase_reference(int n, std::int64_t k_star) {
    const double lambda = 2.0 * std::numbers::pi * static_cast<double>(k_star) / std::ldexp(1.0, n);
    const double p0 = std::cos(lambda) * std::cos(lambda);
    std::vector<std::pair<std::uint64_t, double>> e;
    if (p0 > 1e-15) e.emplace_back(0, p0);
    if (1.0 - p0 > 1e-15) e.emplace_back(std::uint64_t{1} << n, 1.0 - p0);
    double total = 0.0;
    for (auto& x : e) total += x.second;
    for (auto& x : e) x.second /= total;
    return {n + 1, std::move(e)};
}

// n work qubits (0..n-1) plus the ancilla at qubit n. The shift by +-k* is
// conditioned on the ancilla through RZZ(ancilla, work_b), so the ancilla
// picks up the phase lambda = 2 pi k*/N while the work register returns to |0>.
inline Challenge gen_hidden_phase_qft(int n, std::int64_t k_star) {
    require(n >= 1, "hidden phase challenge needs n >= 1");
    const std::int64_t N = std::int64_t{1} << n;
    require(k_star >= 0 && k_star < N, "k* must lie in [0, 2^n)");
    const int anc = n;
    const auto work = qubit_range(0, n);
    Circuit c(n + 1);
    for (int q = 0; q <= n; ++q) c.add(Gate::h(q));
    c.add(qft_gates(work));
    for (int b = 0; b < n; ++b) {
        const double theta =
            std::fmod(4.0 * std::numbers::pi * static_cast<double>(k_star) * std::ldexp(1.0, b) / static_cast<double>(N),
                      4.0 * std::numbers::pi);
        if (theta != 0.0) c.add(Gate::rzz(anc, b, theta));
    }
    c.add(qft_gates(work));
    for (int q = 0; q <= n; ++q) c.add(Gate::h(q));
    c.metadata()["family"] = "hidden_phase_qft";
    c.metadata()["k_star"] = std::to_string(k_star);
    return {std::move(c), hidden_phase_reference(n, k_star)};
}

} // namespace qbench
