#pragma once

#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/errors.hpp"
#include "qbench/generators/fixed_angles.hpp"
#include "qbench/maxcut.hpp"

namespace qbench {

struct LrRampParams {
    double delta_gamma = 1.25;
    double delta_beta = 1.25;
    int p = 1;
};

// Cost layer exp(-i gamma H_c) with H_c = 1/2 sum w (ZZ - 1), i.e. RZZ(gamma w)
// per edge. The mixer is exp(-i beta H_B) with H_B = -sum X, whose ground
// state is the initial |+>^n; as a gate that is RX(-2 beta).
inline Circuit gen_qaoa_maxcut(const MaxCutInstance& g, const QaoaAngles& angles) {
    g.validate();
    angles.validate();
    require(!g.edges.empty(), "QAOA needs at least one edge");
    Circuit c(g.n);
    for (int q = 0; q < g.n; ++q) c.add(Gate::h(q));
    for (int k = 0; k < angles.p(); ++k) {
        for (const Edge& e : g.edges) c.add(Gate::rzz(e.u, e.v, angles.gammas[k] * e.w));
        for (int q = 0; q < g.n; ++q) c.add(Gate::rx(q, -2.0 * angles.betas[k]));
    }
    c.metadata()["family"] = "qaoa";
    c.metadata()["p"] = std::to_string(angles.p());
    return c;
}

inline QaoaAngles lr_qaoa_schedule(const LrRampParams& r) {
    require(r.p >= 1, "LR-QAOA needs p >= 1");
    QaoaAngles a;
    for (int k = 0; k < r.p; ++k) {
        a.betas.push_back((1.0 - static_cast<double>(k) / r.p) * r.delta_beta);
        a.gammas.push_back(static_cast<double>(k + 1) / r.p * r.delta_gamma);
    }
    return a;
}

} // namespace qbench
