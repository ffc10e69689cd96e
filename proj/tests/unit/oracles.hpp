#pragma once

// Reference implementations used only by tests. They are written
// independently of the library kernels: dense matrices built by generic
// embedding of small gate matrices.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qbench/circuit.hpp"
#include "qbench/simulator.hpp"

namespace oracle {

using qbench::cplx;
using Mat = Eigen::MatrixXcd;

inline Mat small_matrix(const qbench::Gate& g) {
    using qbench::GateKind;
    const cplx I(0, 1);
    const double t = g.angle.value_or(0.0);
    Mat m;
    switch (g.kind) {
    case GateKind::H: m = Mat(2, 2); m << 1, 1, 1, -1; m /= std::sqrt(2.0); break;
    case GateKind::X: m = Mat(2, 2); m << 0, 1, 1, 0; break;
    case GateKind::Y: m = Mat(2, 2); m << 0, -I, I, 0; break;
    case GateKind::Z: m = Mat(2, 2); m << 1, 0, 0, -1; break;
    case GateKind::RX: m = Mat(2, 2); m << std::cos(t / 2), -I * std::sin(t / 2), -I * std::sin(t / 2), std::cos(t / 2); break;
    case GateKind::RY: m = Mat(2, 2); m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2); break;
    case GateKind::RZ: m = Mat(2, 2); m << std::exp(-I * t / 2.0), 0, 0, std::exp(I * t / 2.0); break;
    default: {
        // Multi-qubit kinds: exponentiate or permute in the local basis where
        // local bit k corresponds to g.qubits[k].
        const int k = static_cast<int>(g.qubits.size());
        const int d = 1 << k;
        m = Mat::Zero(d, d);
        if (g.kind == GateKind::RXX || g.kind == GateKind::RYY || g.kind == GateKind::RZZ) {
            Mat p(2, 2);
            if (g.kind == GateKind::RXX) p << 0, 1, 1, 0;
            else if (g.kind == GateKind::RYY) p << 0, -I, I, 0;
            else p << 1, 0, 0, -1;
            Mat pp(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) pp(r, c) = p(r & 1, c & 1) * p(r >> 1, c >> 1);
            m = std::cos(t / 2) * Mat::Identity(4, 4) - I * std::sin(t / 2) * pp;
        } else if (g.kind == GateKind::CPHASE) {
            m = Mat::Identity(4, 4);
            m(3, 3) = std::exp(I * t);
        } else if (g.kind == GateKind::CZ) {
            m = Mat::Identity(4, 4);
            m(3, 3) = -1;
        } else if (g.kind == GateKind::SWAP) {
            for (int c = 0; c < 4; ++c) m(((c & 1) << 1) | (c >> 1), c) = 1;
        } else {
            // CX / CCX / MCX: flip the last local bit when all others are set.
            const int all = (1 << (k - 1)) - 1;
            for (int c = 0; c < d; ++c) {
                const int r = ((c & all) == all) ? (c ^ (1 << (k - 1))) : c;
                m(r, c) = 1;
            }
        }
    }
    }
    return m;
}

inline Mat embed(const qbench::Gate& g, int n) {
    const Mat m = small_matrix(g);
    const int k = static_cast<int>(g.qubits.size());
    const std::size_t D = std::size_t{1} << n;
    Mat u = Mat::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
    for (std::size_t col = 0; col < D; ++col) {
        int lc = 0;
        for (int b = 0; b < k; ++b) lc |= static_cast<int>((col >> g.qubits[static_cast<std::size_t>(b)]) & 1u) << b;
        for (int lr = 0; lr < (1 << k); ++lr) {
            const cplx v = m(lr, lc);
            if (v == cplx(0)) continue;
            std::size_t row = col;
            for (int b = 0; b < k; ++b) {
                const std::size_t mask = std::size_t{1} << g.qubits[static_cast<std::size_t>(b)];
                row = ((lr >> b) & 1) ? (row | mask) : (row & ~mask);
            }
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
        }
    }
    return u;
}

inline Mat unitary(const qbench::Circuit& c) {
    const auto D = static_cast<Eigen::Index>(std::size_t{1} << c.num_qubits());
    Mat u = Mat::Identity(D, D);
    for (const auto& g : c.gates()) u = embed(g, c.num_qubits()) * u;
    return u;
}

inline Mat unitary(const std::vector<qbench::Gate>& gs, int n) {
    qbench::Circuit c(n);
    c.add(gs);
    return unitary(c);
}

inline Mat dft(int n) {
    const auto N = static_cast<Eigen::Index>(1) << n;
    Mat f(N, N);
    for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index k = 0; k < N; ++k)
            f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                                 2.0 * std::numbers::pi * static_cast<double>(j * k % N) / static_cast<double>(N));
    return f;
}

// Max-entry distance after removing the best global phase.
inline double phase_distance(const Mat& a, const Mat& b) {
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const cplx ph = a(r, c) / b(r, c);
    return (a - (ph / std::abs(ph)) * b).cwiseAbs().maxCoeff();
}

} // namespace oracle
