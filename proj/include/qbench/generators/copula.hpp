#pragma once

#include <string>
#include <vector>

#include "qbench/circuit.hpp"

namespace qbench {

enum class CopulaAnsatz { ansatz1, ansatz2 };

// ansatz1: RX,RZ per qubit; RXX on every pair; RX,RZ per qubit.
// ansatz2: GHZ over the first qubit of each register; RZ,RX per qubit; RZZ on
// every (i, i+2) pair and on the leading pair inside each register.
inline int copula_param_count(CopulaAnsatz v, int n_vars, int m_bits) {
    const int q = n_vars * m_bits;
    if (v == CopulaAnsatz::ansatz1) return 4 * q + q * (q - 1) / 2;
    return 2 * q + std::max(0, q - 2) + (m_bits >= 2 ? n_vars : 0);
}

inline Circuit gen_copula_ansatz(CopulaAnsatz v, int n_vars, int m_bits, const std::vector<double>& params) {
    require(n_vars >= 1 && m_bits >= 1, "copula needs n_vars >= 1 and m_bits >= 1");
    const int q = n_vars * m_bits;
    const int expect = copula_param_count(v, n_vars, m_bits);
    require(static_cast<int>(params.size()) == expect,
            "copula ansatz expects " + std::to_string(expect) + " parameters, got " + std::to_string(params.size()));
    Circuit c(q);
    std::size_t k = 0;
    if (v == CopulaAnsatz::ansatz1) {
        for (int i = 0; i < q; ++i, k += 2) c.add(Gate::rx(i, params[k])).add(Gate::rz(i, params[k + 1]));
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) c.add(Gate::rxx(i, j, params[k++]));
        for (int i = 0; i < q; ++i, k += 2) c.add(Gate::rx(i, params[k])).add(Gate::rz(i, params[k + 1]));
    } else {
        c.add(Gate::h(0));
        for (int r = 1; r < n_vars; ++r) c.add(Gate::cx((r - 1) * m_bits, r * m_bits));
        for (int i = 0; i < q; ++i, k += 2) c.add(Gate::rz(i, params[k])).add(Gate::rx(i, params[k + 1]));
        for (int i = 0; i + 2 < q; ++i) c.add(Gate::rzz(i, i + 2, params[k++]));
        if (m_bits >= 2)
            for (int r = 0; r < n_vars; ++r) c.add(Gate::rzz(r * m_bits, r * m_bits + 1, params[k++]));
    }
    c.metadata()["family"] = "copula";
    c.metadata()["ansatz"] = v == CopulaAnsatz::ansatz1 ? "1" : "2";
    return c;
}

} // namespace qbench
