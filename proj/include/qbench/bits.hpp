#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qbench/errors.hpp"

namespace qbench {

// Basis index <-> bitstring. Qubit 0 is the least significant bit; strings
// are rendered most significant first, so "01" means qubit 0 is set.
inline std::string to_bitstring(std::uint64_t value, int num_bits) {
    std::string s(static_cast<std::size_t>(num_bits), '0');
    for (int b = 0; b < num_bits; ++b)
        if ((value >> b) & 1u) s[static_cast<std::size_t>(num_bits - 1 - b)] = '1';
    return s;
}

inline std::uint64_t from_bitstring(std::string_view s) {
    require(s.size() <= 64, "bitstring longer than 64 bits");
    std::uint64_t v = 0;
    for (char c : s) {
        require(c == '0' || c == '1', "bitstring may only contain 0 and 1");
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

inline int popcount_parity(std::uint64_t v) { return __builtin_popcountll(v) & 1; }

// splitmix64 finalizer, used to derive independent RNG streams from one seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix_seed(a ^ mix_seed(b));
}

// Uniform double in [0,1) from a 64-bit engine. std::uniform_real_distribution
// is implementation-defined, this is not.
template <class Engine>
inline double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) without modulo bias.
template <class Engine>
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do { x = eng(); } while (x >= limit);
    return x % n;
}

} // namespace qbench
