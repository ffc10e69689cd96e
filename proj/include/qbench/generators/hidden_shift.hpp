#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/circuit.hpp"

namespace qbench {

enum class PermutationFamily { cx_ladder, ccx_ladder, mcx, random_cx };

inline std::string family_name(PermutationFamily f) {
    switch (f) {
    case PermutationFamily::cx_ladder: return "cx_ladder";
    case PermutationFamily::ccx_ladder: return "ccx_ladder";
    case PermutationFamily::mcx: return "mcx";
    case PermutationFamily::random_cx: return "random_cx";
    }
    return "?";
}

inline PermutationFamily permutation_family_from_name(const std::string& s) {
    for (auto f : {PermutationFamily::cx_ladder, PermutationFamily::ccx_ladder, PermutationFamily::mcx,
                   PermutationFamily::random_cx})
        if (family_name(f) == s) return f;
    throw InvalidArgument("unknown permutation family '" + s + "'");
}

// Permutation of an m-bit register as reversible gates, indices local to the
// register (0..m-1).
inline std::vector<Gate> gen_permutation(PermutationFamily fam, int m, int count = 50, std::uint64_t seed = 0) {
    std::vector<Gate> out;
    switch (fam) {
    case PermutationFamily::cx_ladder:
        require(m >= 2, "cx ladder needs m >= 2");
        for (int j = 1; j < m; ++j) out.push_back(Gate::cx(j - 1, j));
        break;
    case PermutationFamily::ccx_ladder:
        // m - 2 Toffolis; empty (identity) at m = 2
        require(m >= 2, "ccx ladder needs m >= 2");
        for (int j = 0; j + 2 < m; ++j) out.push_back(Gate::ccx(j, j + 1, j + 2));
        break;
    case PermutationFamily::mcx: {
        require(m >= 2, "mcx permutation needs m >= 2");
        std::vector<int> ctrls;
        for (int j = 0; j + 1 < m; ++j) ctrls.push_back(j);
        out.push_back(Gate::mcx(ctrls, m - 1));
        break;
    }
    case PermutationFamily::random_cx: {
        require(m >= 2, "random CX permutation needs m >= 2");
        require(count >= 0, "CX count must be non-negative");
        std::mt19937_64 rng(seed);
        for (int k = 0; k < count; ++k) {
            const int c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)));
            int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m - 1)));
            if (t >= c) ++t;
            out.push_back(Gate::cx(c, t));
        }
        break;
    }
    }
    return out;
}

inline std::vector<Gate> remap(const std::vector<Gate>& gs, int stride, int offset) {
    std::vector<Gate> out;
    for (Gate g : gs) {
        for (int& q : g.qubits) q = stride * q + offset;
        out.push_back(std::move(g));
    }
    return out;
}

// The permutation acts on wires 0,2,4,...; the CZ stack pairs wire 2j with 2j+1.
struct HiddenShiftSpec {
    int n = 0;
    std::uint64_t shift = 0;
    std::vector<Gate> permutation; // on the even wires

    static HiddenShiftSpec make(int n, std::uint64_t shift, const std::vector<Gate>& local_perm) {
        HiddenShiftSpec s{n, shift, remap(local_perm, 2, 0)};
        s.validate();
        return s;
    }

    void validate() const {
        require(n >= 2 && n % 2 == 0, "hidden shift needs an even qubit count");
        require(n >= 64 || shift < (std::uint64_t{1} << n), "shift wider than n bits");
        for (const Gate& g : permutation) {
            require(g.kind == GateKind::CX || g.kind == GateKind::CCX || g.kind == GateKind::MCX,
                    "permutation gates must be CX, CCX or MCX");
            for (int q : g.qubits) require(q % 2 == 0 && q < n, "permutation gate leaves the even register");
        }
    }
};

inline Circuit gen_hidden_shift(const HiddenShiftSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const auto perm = spec.permutation;
    const auto perm_inv = inverse(perm);
    // pi^{-1} on the partner wires (2j -> 2j+1) and its undo.
    const auto dual_fwd = remap(perm_inv, 1, 1);
    const auto dual_inv = inverse(dual_fwd);

    Circuit c(n);
    auto hadamards = [&] {
        for (int q = 0; q < n; ++q) c.add(Gate::h(q));
    };
    auto cz_stack = [&] {
        for (int j = 0; 2 * j + 1 < n; ++j) c.add(Gate::cz(2 * j, 2 * j + 1));
    };
    auto shift_x = [&] {
        for (int q = 0; q < n; ++q)
            if ((spec.shift >> q) & 1u) c.add(Gate::x(q));
    };

    hadamards();
    // U_g: phase (-1)^{f(z xor s)} with f(x, y) = pi(y_even) . x_odd
    shift_x();
    c.add(perm);
    cz_stack();
    c.add(perm_inv);
    shift_x();
    hadamards();
    // U_f~: the dual bent function pi^{-1}(x_odd) . y_even
    c.add(dual_fwd);
    cz_stack();
    c.add(dual_inv);
    hadamards();
    c.metadata()["family"] = "hidden_shift";
    c.metadata()["shift"] = to_bitstring(spec.shift, n);
    return c;
}

// Shift bits drawn independently with P(1) = p_one.
inline std::uint64_t draw_shift(int n, std::uint64_t seed, double p_one = 0.75) {
    std::mt19937_64 rng(seed);
    std::uint64_t s = 0;
    for (int q = 0; q < n; ++q)
        if (uniform01(rng) < p_one) s |= std::uint64_t{1} << q;
    return s;
}

} // namespace qbench
