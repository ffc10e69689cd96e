#include <catch_amalgamated.hpp>

#include "qbench/generators/hidden_shift.hpp"
#include "qbench/simulator.hpp"

using namespace qbench;
using Catch::Approx;

namespace {

// Classical oracle: f(x, y) = pi(y) . x with y on even wires, x on odd wires.
// The hidden shift circuit is correct iff the dual relation holds, which we
// verify through simulation only; this helper checks pi is a bijection.
bool is_bijection(const std::vector<Gate>& local, int m) {
    std::vector<bool> hit(1u << m, false);
    for (std::uint64_t y = 0; y < (1u << m); ++y) {
        Circuit c(m);
        for (int q = 0; q < m; ++q)
            if ((y >> q) & 1u) c.add(Gate::x(q));
        c.add(local);
        const auto d = ideal_distribution(c);
        if (d.support_size() != 1) return false;
        const auto out = d.entries().front().first;
        if (hit[out]) return false;
        hit[out] = true;
    }
    return true;
}

} // namespace

TEST_CASE("permutation families") {
    CHECK(gen_permutation(PermutationFamily::cx_ladder, 4).size() == 3);
    CHECK(gen_permutation(PermutationFamily::ccx_ladder, 5).size() == 3);
    const auto m = gen_permutation(PermutationFamily::mcx, 4);
    REQUIRE(m.size() == 1);
    CHECK(m[0].kind == GateKind::MCX);
    CHECK(m[0].target() == 3);
    const auto r1 = gen_permutation(PermutationFamily::random_cx, 5, 50, 9);
    const auto r2 = gen_permutation(PermutationFamily::random_cx, 5, 50, 9);
    CHECK(r1.size() == 50);
    CHECK(r1 == r2);
    CHECK_FALSE(r1 == gen_permutation(PermutationFamily::random_cx, 5, 50, 10));
    for (const auto& g : r1) CHECK(g.kind == GateKind::CX);
    CHECK(gen_permutation(PermutationFamily::ccx_ladder, 2).empty());
    CHECK_THROWS_AS(gen_permutation(PermutationFamily::ccx_ladder, 1), InvalidArgument);
    CHECK_THROWS_AS(gen_permutation(PermutationFamily::cx_ladder, 1), InvalidArgument);
    for (auto f : {PermutationFamily::cx_ladder, PermutationFamily::ccx_ladder, PermutationFamily::mcx,
                   PermutationFamily::random_cx})
        CHECK(is_bijection(gen_permutation(f, 4, 20, 3), 4));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(HiddenShiftSpec::make(5, 0, {}), InvalidArgument);
    CHECK_THROWS_AS(HiddenShiftSpec::make(4, 16, {}), InvalidArgument);
    HiddenShiftSpec bad{4, 0, {Gate::cx(0, 1)}};
    CHECK_THROWS_AS(gen_hidden_shift(bad), InvalidArgument);
    HiddenShiftSpec bad_kind{4, 0, {Gate::h(0)}};
    CHECK_THROWS_AS(gen_hidden_shift(bad_kind), InvalidArgument);
}

TEST_CASE("identity permutation and zero shift") {
    const auto d = ideal_distribution(gen_hidden_shift(HiddenShiftSpec::make(4, 0, {})));
    CHECK(d.probability(0) == Approx(1.0).margin(1e-12));
}

TEST_CASE("random specs return the shift with certainty") {
    std::uint64_t seed = 100;
    for (int n : {4, 6, 8}) {
        const int m = n / 2;
        for (auto f : {PermutationFamily::cx_ladder, PermutationFamily::ccx_ladder, PermutationFamily::mcx,
                       PermutationFamily::random_cx}) {
            for (int t = 0; t < 50; ++t, ++seed) {
                const auto shift = draw_shift(n, seed);
                const auto spec = HiddenShiftSpec::make(n, shift, gen_permutation(f, m, 50, seed));
                const auto d = ideal_distribution(gen_hidden_shift(spec));
                CHECK(d.probability(shift) == Approx(1.0).margin(1e-9));
            }
        }
    }
}

TEST_CASE("shift sampling rate") {
    int ones = 0, total = 0;
    for (std::uint64_t s = 0; s < 2000; ++s) {
        ones += __builtin_popcountll(draw_shift(8, s));
        total += 8;
    }
    // 16000 Bernoulli(0.75) draws: sd of the mean is 0.0034
    CHECK(double(ones) / total == Approx(0.75).margin(0.02));
}
