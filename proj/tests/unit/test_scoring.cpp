#include <catch_amalgamated.hpp>

#include <random>

#include "qbench/generators/qaoa.hpp"
#include "qbench/harness/graphs.hpp"
#include "qbench/scoring.hpp"

using namespace qbench;
using Catch::Approx;

namespace {

MaxCutInstance triangle() { return {3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, "triangle", std::nullopt}; }

MaxCutInstance cycle(int n) {
    MaxCutInstance g{n, {}, "cycle", std::nullopt};
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1.0});
    return g;
}

ShotHistogram uniform_hist(int n, std::uint64_t each = 1) {
    ShotHistogram h(n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        for (std::uint64_t k = 0; k < each; ++k) h.add(x);
    return h;
}

} // namespace

TEST_CASE("cut values") {
    const auto t = triangle();
    CHECK(cut_value(t, "000") == 0);
    CHECK(cut_value(t, "001") == 2);
    CHECK(cut_value(t, "111") == 0);
    CHECK_THROWS_AS(cut_value(t, "01"), InvalidArgument);

    auto g = gen_fcw_graph(10, 4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = rng() & 1023;
        const std::string s = to_bitstring(x, 10);
        double direct = 0;
        for (const auto& e : g.edges)
            if (s[static_cast<std::size_t>(9 - e.u)] != s[static_cast<std::size_t>(9 - e.v)]) direct += e.w;
        CHECK(cut_value(g, s) == Approx(direct).margin(1e-12));
    }
}

TEST_CASE("exact max cut") {
    CHECK(max_cut_exact(triangle()) == 2);
    MaxCutInstance k33{6, {}, "k33", std::nullopt};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.edges.push_back({a, b, 1.0});
    CHECK(max_cut_exact(k33) == 9);
    CHECK(max_cut_exact(cycle(5)) == 4);

    auto g = triangle();
    CHECK_FALSE(g.c_opt.has_value());
    max_cut_exact(g);
    REQUIRE(g.c_opt.has_value());
    CHECK(*g.c_opt == 2);

    // Brute force over all 2^n assignments as a cross-check.
    auto w = gen_fcw_graph(9, 2);
    double best = 0;
    for (std::uint64_t x = 0; x < 512; ++x) best = std::max(best, cut_value(w, x));
    CHECK(max_cut_exact(w) == Approx(best).margin(1e-12));

    MaxCutInstance big{27, {}, "", std::nullopt};
    CHECK_THROWS_AS(max_cut_exact(big), ResourceLimit);
}

TEST_CASE("approximation ratio") {
    const auto t = triangle();
    ShotHistogram opt(3);
    opt.add(1, 100);
    CHECK(approximation_ratio(opt, t).value == 1.0);
    CHECK(approximation_ratio(uniform_hist(3), t).value == Approx(0.75));
    CHECK_THROWS_AS(approximation_ratio(ShotHistogram(3), t), InvalidArgument);

    auto g = gen_regular_graph(8, 3, 5);
    const auto c = gen_qaoa_maxcut(g, {{0.0}, {0.0}});
    CHECK(expected_approximation_ratio(ideal_distribution(c), g) ==
          Approx(g.edges.size() / (2.0 * max_cut_exact(g))).margin(1e-12));

    // Never above one for non-negative weights.
    std::mt19937_64 rng(2);
    auto w = gen_fcw_graph(8, 9);
    for (int t2 = 0; t2 < 20; ++t2) {
        ShotHistogram h(8);
        for (int k = 0; k < 50; ++k) h.add(rng() & 255);
        CHECK(approximation_ratio(h, w).value <= 1.0 + 1e-12);
        CHECK(best_shot_ratio(h, w) <= 1.0 + 1e-12);
    }
}

TEST_CASE("random baseline") {
    const auto t = triangle();
    const auto rb = random_baseline(t, 20000, 10, 1);
    CHECK(rb.mu == Approx(0.75).margin(0.01));
    CHECK(rb.ar_rand == Approx(rb.mu + 3 * rb.sigma));
    CHECK(random_baseline(t, 5000, 50, 3).sigma < random_baseline(t, 100, 50, 3).sigma);
    const auto a = random_baseline(t, 500, 5, 9), b = random_baseline(t, 500, 5, 9);
    CHECK(a.mu == b.mu);
    CHECK(a.sigma == b.sigma);
    CHECK_THROWS_AS(random_baseline(t, 10, 1, 0), InvalidArgument);
}

TEST_CASE("effective approximation ratio") {
    CHECK(ar_eff({0.7}, 0.7).value == Approx(0.0).margin(1e-15));
    CHECK(ar_eff({0.9, 1.0, 0.8}, 0.7).value == Approx(1.0));
    CHECK(ar_eff({0.85, 0.6}, 0.7).value == Approx(0.5));
    CHECK_FALSE(*ar_eff({0.6}, 0.7).passed);
    CHECK(ar_eff({0.6}, 0.7).value < 0);
    CHECK_THROWS_AS(ar_eff({0.9}, 1.0), InvalidArgument);
}

TEST_CASE("fixed-point search score") {
    ShotHistogram h(4);
    h.add(3, 60);
    h.add(5, 40);
    CHECK(faa_score(h, 3, 0.6).value == Approx(1.0));
    CHECK(faa_score(h, 7, 0.6).value == 0.0);
    const auto over = faa_score(h, 3, 0.5);
    CHECK(over.value == 1.0);
    CHECK(*over.unclamped == Approx(1.2));
    CHECK_THROWS_AS(faa_score(h, 3, 0.0), InvalidArgument);
}

TEST_CASE("hidden shift score") {
    ShotHistogram h(4);
    h.add(9, 10);
    CHECK(hidden_shift_score(h, 9).value == 1.0);
    CHECK(hidden_shift_score(h, 8).value == 0.0);
    ShotHistogram g(4);
    g.add(9, 5);
    g.add(1, 5);
    CHECK(hidden_shift_score({h, g}, {9, 9}).value == Approx(0.75));
}

TEST_CASE("image mse") {
    const auto img = constant_image(4);
    std::vector<std::pair<std::uint64_t, double>> u;
    for (std::uint64_t i = 0; i < 16; ++i) u.push_back({i, 1.0 / 16});
    CHECK(mse_score(OutcomeDistribution(4, u), img).value == Approx(0.0).margin(1e-15));
    CHECK(*mse_score(OutcomeDistribution(4, u), img).passed);

    ImageSpec half{4, std::vector<double>(16, 0.0), ""};
    for (int i = 0; i < 8; ++i) half.pixels[static_cast<std::size_t>(i)] = 1.0;
    std::vector<std::pair<std::uint64_t, double>> top;
    for (std::uint64_t i = 8; i < 16; ++i) top.push_back({i, 1.0 / 8});
    CHECK(mse_score(OutcomeDistribution(4, top), half).value == Approx(2.0));
    CHECK_FALSE(*mse_score(OutcomeDistribution(4, top), half).passed);
    CHECK_THROWS_AS(mse_score(OutcomeDistribution(3, {{0, 1.0}}), img), InvalidArgument);
}

TEST_CASE("copula helpers") {
    CHECK(bits_to_copula("000", 3, 1) == std::vector<double>{0.0});
    CHECK(bits_to_copula("111", 3, 1) == std::vector<double>{0.875});
    CHECK(bits_to_copula("101", 3, 1) == std::vector<double>{0.625});
    CHECK(bits_to_copula("101011", 3, 2) == std::vector<double>{0.625, 0.375});
    CHECK_THROWS_AS(bits_to_copula("10", 3, 1), InvalidArgument);

    const std::vector<Sample> xs{{0.1, 0.2}, {0.5, 0.5}, {0.9, 0.0}};
    const std::vector<Sample> ys{{0.3, 0.3}, {0.7, 0.1}};
    CHECK(mmd(xs, xs) == Approx(0.0).margin(1e-12));
    CHECK(mmd(xs, ys) == Approx(mmd(ys, xs)).margin(1e-15));
    double prev = -1;
    for (double d = 0.0; d <= 4.0; d += 0.25) {
        const double m = mmd({{0.0}}, {{d}});
        CHECK(m == Approx(2 * (1 - std::exp(-d * d / 2))).margin(1e-12));
        CHECK(m > prev);
        prev = m;
    }
    CHECK_THROWS_AS(mmd({}, ys), InvalidArgument);
}

TEST_CASE("value at risk") {
    std::vector<double> l;
    for (int i = 1; i <= 100; ++i) l.push_back(i);
    std::shuffle(l.begin(), l.end(), std::mt19937_64(1));
    CHECK(value_at_risk(l, 0.95) == 95);
    CHECK(value_at_risk({3.0}, 0.5) == 3);
    CHECK(var_score(l, l).value == 1.0);
    std::vector<double> twice;
    for (double x : l) twice.push_back(2 * x);
    CHECK(var_score(twice, l).value == Approx(0.5));
    CHECK(var_score(l, twice).value == Approx(0.5));
    CHECK_THROWS_AS(var_score(l, std::vector<double>(10, 0.0)), DegenerateInput);
    CHECK_THROWS_AS(value_at_risk({}, 0.9), InvalidArgument);
}
