#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/errors.hpp"
#include "qbench/maxcut.hpp"

namespace qbench {

// Pairing model: shuffle n*d stubs, pair neighbours, reject on loops or
// multi-edges. Acceptance probability is roughly exp(-(d^2-1)/4), so the
// loop terminates quickly for d <= 4.
inline MaxCutInstance gen_regular_graph(int n, int d, std::uint64_t seed) {
    require(n >= 2 && d >= 1, "regular graph needs n >= 2 and d >= 1");
    require(d < n, "degree must be smaller than the vertex count");
    require((n * d) % 2 == 0, "n*d must be even for a d-regular graph");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            const int u = std::min(stubs[i], stubs[i + 1]), v = std::max(stubs[i], stubs[i + 1]);
            ok = u != v && seen.insert({u, v}).second;
        }
        if (!ok) continue;
        MaxCutInstance g;
        g.n = n;
        g.family = std::to_string(d) + "-regular";
        for (const auto& [u, v] : seen) g.edges.push_back({u, v, 1.0});
        return g;
    }
    throw ResourceLimit("pairing model did not produce a simple graph");
}

inline MaxCutInstance gen_fcw_graph(int n, std::uint64_t seed) {
    require(n >= 2, "FCW graph needs n >= 2");
    std::mt19937_64 rng(seed);
    MaxCutInstance g;
    g.n = n;
    g.family = "fcw";
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, 1.0 - uniform01(rng)}); // (0, 1]
    return g;
}

} // namespace qbench
