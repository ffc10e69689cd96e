#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qbench/circuit.hpp"
#include "qbench/generators/image.hpp"

namespace qbench {

namespace mps {

using Eigen::Matrix4d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Real MPS tensor B[l, s, r] with shape (left, 2, right).
struct Site {
    int left = 1;
    int right = 1;
    std::vector<double> t;
    double operator()(int l, int s, int r) const { return t[static_cast<std::size_t>((l * 2 + s) * right + r)]; }
};

// Right-canonical MPS truncated to bond dimension 2 by one SVD sweep from the
// right. Site j is qubit n-1-j (the most significant bit first).
inline std::vector<Site> bond2_mps(const VectorXd& psi, int n) {
    std::vector<Site> sites(static_cast<std::size_t>(n));
    int chi_r = 1;
    // rem(prefix, s_j * chi_r + b)
    MatrixXd rem = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        psi.data(), psi.size() / 2, 2);
    for (int j = n - 1; j >= 1; --j) {
        Eigen::JacobiSVD<MatrixXd> svd(rem, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const int k = std::min<int>(2, static_cast<int>(svd.singularValues().size()));
        const MatrixXd Vt = svd.matrixV().leftCols(k).transpose();
        Site& B = sites[static_cast<std::size_t>(j)];
        B.left = k;
        B.right = chi_r;
        B.t.assign(static_cast<std::size_t>(k * 2 * chi_r), 0.0);
        for (int a = 0; a < k; ++a)
            for (int col = 0; col < 2 * chi_r; ++col) B.t[static_cast<std::size_t>(a * 2 * chi_r + col)] = Vt(a, col);
        const MatrixXd us = svd.matrixU().leftCols(k) * svd.singularValues().head(k).asDiagonal();
        // Fold the next physical index into the columns.
        MatrixXd next(us.rows() / 2, 2 * k);
        for (Eigen::Index p = 0; p < next.rows(); ++p)
            for (int s = 0; s < 2; ++s)
                for (int a = 0; a < k; ++a) next(p, s * k + a) = us(p * 2 + s, a);
        rem = next;
        chi_r = k;
    }
    Site& B0 = sites[0];
    B0.left = 1;
    B0.right = chi_r;
    B0.t.assign(static_cast<std::size_t>(2 * chi_r), 0.0);
    const double nrm = rem.norm();
    for (int col = 0; col < 2 * chi_r; ++col) B0.t[static_cast<std::size_t>(col)] = rem(0, col) / nrm;
    return sites;
}

// Extends r orthonormal columns to a 4x4 rotation (det +1) that keeps them.
inline Matrix4d complete_rotation(const MatrixXd& cols) {
    const int r = static_cast<int>(cols.cols());
    Matrix4d Q = Matrix4d::Zero();
    Q.leftCols(r) = cols;
    int filled = r;
    for (int e = 0; e < 4 && filled < 4; ++e) {
        VectorXd v = VectorXd::Unit(4, e);
        for (int k = 0; k < filled; ++k) v -= Q.col(k).dot(v) * Q.col(k);
        if (v.norm() > 1e-6) Q.col(filled++) = v.normalized();
    }
    // Second pass for numerical orthogonality of the free columns.
    for (int i = r; i < 4; ++i) {
        VectorXd v = Q.col(i);
        for (int k = 0; k < i; ++k) v -= Q.col(k).dot(v) * Q.col(k);
        Q.col(i) = v.normalized();
    }
    if (Q.determinant() < 0) Q.col(3) = -Q.col(3);
    return Q;
}

// One staircase layer preparing the bond-2 MPS from |0...0>. Gate j acts on
// (site j, site j+1), index s_j*2 + s_{j+1}; its inputs |a>|0> are fixed by
// the tensors, the rest is free.
inline std::vector<Matrix4d> staircase_layer(const std::vector<Site>& B) {
    const int n = static_cast<int>(B.size());
    std::vector<Matrix4d> gates;
    for (int j = 0; j + 1 < n; ++j) {
        const bool last = j == n - 2;
        const Site& cur = B[static_cast<std::size_t>(j)];
        const int chil = cur.left;
        MatrixXd cols = MatrixXd::Zero(4, chil);
        for (int a = 0; a < chil; ++a)
            for (int s = 0; s < 2; ++s) {
                if (last) {
                    const Site& end = B[static_cast<std::size_t>(n - 1)];
                    for (int t = 0; t < 2; ++t) {
                        double v = 0.0;
                        for (int b = 0; b < cur.right; ++b) v += cur(a, s, b) * end(b, t, 0);
                        cols(s * 2 + t, a) = v;
                    }
                } else {
                    for (int b = 0; b < cur.right; ++b) cols(s * 2 + b, a) = cur(a, s, b);
                }
            }
        const Matrix4d Q = complete_rotation(cols);
        Matrix4d G;
        std::vector<int> fixed, free;
        for (int i = 0; i < 4; ++i) ((i % 2 == 0 && i / 2 < chil) ? fixed : free).push_back(i);
        int k = 0;
        for (int i : fixed) G.col(i) = Q.col(k++);
        for (int i : free) G.col(i) = Q.col(k++);
        // Column permutation may flip the determinant; restore +1.
        if (G.determinant() < 0) G.col(free.back()) = -G.col(free.back());
        gates.push_back(G);
    }
    return gates;
}

inline void apply_two_site(VectorXd& psi, const Matrix4d& G, int j, int n) {
    const Eigen::Index rest = Eigen::Index{1} << (n - j - 2);
    const Eigen::Index blocks = Eigen::Index{1} << j;
    Eigen::Vector4d v;
    for (Eigen::Index x = 0; x < blocks; ++x)
        for (Eigen::Index y = 0; y < rest; ++y) {
            for (int m = 0; m < 4; ++m) v(m) = psi((x * 4 + m) * rest + y);
            const Eigen::Vector4d w = G * v;
            for (int m = 0; m < 4; ++m) psi((x * 4 + m) * rest + y) = w(m);
        }
}

// Layer k approximates the residual left after undoing layers 1..k-1.
// Returned in preparation order: the last entry acts first on |0>.
inline std::vector<std::vector<Matrix4d>> extract_layers(const std::vector<double>& target, int depth) {
    require(depth >= 1, "MPS loading needs depth >= 1");
    const int n = static_cast<int>(std::log2(static_cast<double>(target.size())) + 0.5);
    VectorXd residual = Eigen::Map<const VectorXd>(target.data(), static_cast<Eigen::Index>(target.size()));
    std::vector<std::vector<Matrix4d>> layers;
    for (int k = 0; k < depth; ++k) {
        auto layer = staircase_layer(bond2_mps(residual, n));
        for (int j = n - 2; j >= 0; --j) apply_two_site(residual, layer[static_cast<std::size_t>(j)].transpose(), j, n);
        layers.push_back(std::move(layer));
    }
    return layers;
}

// ZYZ Euler angles: U = e^{ia} RZ(phi) RY(theta) RZ(lambda).
struct Zyz {
    double phi, theta, lambda;
};

inline Zyz zyz_angles(const Eigen::Matrix2cd& U) {
    const std::complex<double> d = std::sqrt(U.determinant());
    const Eigen::Matrix2cd V = U / d;
    const double theta = 2.0 * std::atan2(std::abs(V(1, 0)), std::abs(V(0, 0)));
    const double sum = std::abs(V(0, 0)) > 1e-12 ? -2.0 * std::arg(V(0, 0)) : 0.0;
    const double diff = std::abs(V(1, 0)) > 1e-12 ? 2.0 * std::arg(V(1, 0)) : 0.0;
    return {(sum + diff) / 2.0, theta, (sum - diff) / 2.0};
}

inline void append_zyz(std::vector<Gate>& out, int q, const Eigen::Matrix2cd& U) {
    const Zyz z = zyz_angles(U);
    out.push_back(Gate::rz(q, z.lambda));
    out.push_back(Gate::ry(q, z.theta));
    out.push_back(Gate::rz(q, z.phi));
}

// SO(4) -> CX + rotations through the magic basis M (hi is the first tensor
// factor). M G M^dag = A (x) B, and M = CX(lo->hi) . (I (x) H) . (S (x) S), so
// G = (S^dag (x) S^dag H) . CX . (A (x) B) . CX . (S (x) H S) up to phase.
inline std::vector<Gate> orthogonal_to_gates(const Matrix4d& G, int hi, int lo) {
    using C = std::complex<double>;
    const C i1(0, 1);
    Eigen::Matrix4cd Mg;
    Mg << 1, i1, 0, 0, 0, 0, i1, 1, 0, 0, i1, -1, 1, -i1, 0, 0;
    Mg /= std::sqrt(2.0);
    const Eigen::Matrix4cd K = Mg * G.cast<C>() * Mg.adjoint();
    Eigen::Matrix4cd R;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) R(a1 * 2 + a2, b1 * 2 + b2) = K(a1 * 2 + b1, a2 * 2 + b2);
    Eigen::Index ri = 0, ci = 0;
    R.cwiseAbs().maxCoeff(&ri, &ci);
    Eigen::Matrix2cd A, B;
    for (int k = 0; k < 4; ++k) {
        A(k / 2, k % 2) = R(k, ci);
        B(k / 2, k % 2) = R(ri, k) / R(ri, ci);
    }
    const double q = std::numbers::pi / 2;
    std::vector<Gate> out;
    out.push_back(Gate::rz(hi, q));
    out.push_back(Gate::rz(lo, q));
    out.push_back(Gate::h(lo));
    out.push_back(Gate::cx(lo, hi));
    append_zyz(out, hi, A);
    append_zyz(out, lo, B);
    out.push_back(Gate::cx(lo, hi));
    out.push_back(Gate::h(lo));
    out.push_back(Gate::rz(hi, -q));
    out.push_back(Gate::rz(lo, -q));
    return out;
}

} // namespace mps

inline Circuit gen_mps_loading(const ImageSpec& img, int depth) {
    const auto target = img.normalized();
    const int n = img.num_qubits();
    const auto layers = mps::extract_layers(target, depth);
    Circuit c(n);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it)
        for (int j = 0; j + 1 < n; ++j) c.add(mps::orthogonal_to_gates((*it)[static_cast<std::size_t>(j)], n - 1 - j, n - 2 - j));
    c.metadata()["family"] = "image_loading";
    c.metadata()["depth"] = std::to_string(depth);
    if (!img.source.empty()) c.metadata()["image"] = img.source;
    return c;
}

} // namespace qbench
