#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/errors.hpp"

namespace qbench {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct MaxCutInstance {
    int n = 0;
    std::vector<Edge> edges;
    std::string family; // "3-regular", "4-regular", "fcw", or free-form
    std::optional<double> c_opt;

    void validate() const {
        require(n >= 1, "graph needs at least one vertex");
        for (const Edge& e : edges) {
            require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, "edge endpoint out of range");
            require(e.u != e.v, "self-loops are not allowed");
            require(std::isfinite(e.w), "edge weights must be finite");
        }
        const int d = family == "3-regular" ? 3 : family == "4-regular" ? 4 : 0;
        if (d > 0) {
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
            for (int x : deg) require(x == d, family + " graph has a vertex of degree " + std::to_string(x));
        }
    }

    double total_weight() const {
        double s = 0.0;
        for (const Edge& e : edges) s += e.w;
        return s;
    }
};

// Assignment as a basis index: bit v is the side of vertex v.
inline double cut_value(const MaxCutInstance& g, std::uint64_t assignment) {
    double s = 0.0;
    for (const Edge& e : g.edges)
        if (((assignment >> e.u) ^ (assignment >> e.v)) & 1u) s += e.w;
    return s;
}

inline double cut_value(const MaxCutInstance& g, const std::string& bits) {
    require(static_cast<int>(bits.size()) == g.n, "assignment length must equal the vertex count");
    return cut_value(g, from_bitstring(bits));
}

namespace detail {

// Visits every assignment with vertex n-1 fixed to 0 in Gray-code order,
// passing the running cut value. Ties to the 2^(n-1) distinct bipartitions.
template <class F>
void for_each_bipartition(const MaxCutInstance& g, F&& visit) {
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    std::uint64_t x = 0;
    double cut = 0.0;
    visit(x, cut);
    const std::uint64_t count = std::uint64_t{1} << (g.n - 1);
    for (std::uint64_t i = 1; i < count; ++i) {
        const int v = __builtin_ctzll(i);
        for (const auto& [u, w] : adj[v]) cut += (((x >> u) ^ (x >> v)) & 1u) ? -w : w;
        x ^= std::uint64_t{1} << v;
        visit(x, cut);
    }
}

} // namespace detail

inline constexpr int max_exhaustive_vertices = 26;

inline double max_cut_exact(const MaxCutInstance& g) {
    if (g.c_opt) return *g.c_opt;
    g.validate();
    require<ResourceLimit>(g.n <= max_exhaustive_vertices,
                           "exhaustive max-cut is capped at " + std::to_string(max_exhaustive_vertices) + " vertices");
    double best = 0.0;
    detail::for_each_bipartition(g, [&](std::uint64_t, double c) {
        if (c > best) best = c;
    });
    return best;
}

inline double max_cut_exact(MaxCutInstance& g) {
    if (!g.c_opt) g.c_opt = max_cut_exact(static_cast<const MaxCutInstance&>(g));
    return *g.c_opt;
}

} // namespace qbench
