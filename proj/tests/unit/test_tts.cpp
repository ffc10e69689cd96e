#include <catch_amalgamated.hpp>

#include "qbench/tts.hpp"

using namespace qbench;
using Catch::Approx;

namespace {

double weight_at(const QualityHistogram& h, double q) {
    for (const auto& [x, c] : h.entries)
        if (std::abs(x - q) < 1e-12) return c;
    return 0.0;
}

} // namespace

TEST_CASE("success probability") {
    QualityHistogram ones{{{1.0, 10}}, 1.0};
    CHECK(success_prob(ones, 0.9) == 1.0);
    CHECK(success_prob(ones, 1.01) == 0.0);
    QualityHistogram mix{{{0.5, 50}, {1.0, 50}}, 1.0};
    CHECK(success_prob(mix, 0.8) == 0.5);
    CHECK_THROWS_AS(success_prob(QualityHistogram{}, 0.5), InvalidArgument);
}

TEST_CASE("expectation time to solution") {
    CHECK(tts_expectation(1.0, 3.0) == 3.0);
    CHECK(std::isinf(tts_expectation(0.0, 3.0)));
    CHECK(tts_expectation(0.25, 2.0) == 8.0);
}

TEST_CASE("confidence time to solution") {
    CHECK(tts_confidence(0.5, 1.0) == Approx(6.6439).margin(1e-4));
    CHECK(tts_confidence(14.0 / 5000, 0.89) == Approx(1461.8).margin(0.1));
    CHECK(tts_confidence(1.0, 0.89) == 0.89);
    CHECK(std::isinf(tts_confidence(0.0, 0.89)));
    CHECK_THROWS_AS(tts_confidence(0.5, 1.0, 1.0), InvalidArgument);
    const double r = tts_confidence(1e-6, 1.0) / tts_expectation(1e-6, 1.0);
    CHECK(r == Approx(std::log(100.0)).epsilon(0.01));
}

TEST_CASE("curves are monotone") {
    QualityHistogram h{{{0.2, 3}, {0.5, 10}, {0.7, 4}, {0.9, 2}, {1.0, 1}}, 0.01};
    std::vector<double> th;
    for (int i = 0; i <= 22; ++i) th.push_back(i * 0.05);
    const auto curve = tts_curve(h, th);
    REQUIRE(curve.tts_seconds.size() == th.size());
    for (std::size_t i = 1; i < th.size(); ++i) {
        CHECK(success_prob(h, th[i]) <= success_prob(h, th[i - 1]));
        CHECK(curve.tts_seconds[i] >= curve.tts_seconds[i - 1]);
    }
    CHECK(std::isinf(curve.tts_seconds.back()));
}

TEST_CASE("exhaustive random baseline") {
    MaxCutInstance tri{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, "", std::nullopt};
    const auto h = exact_random_ar_distribution(tri);
    CHECK(h.entries.size() == 2);
    CHECK(weight_at(h, 0.0) == 2);
    CHECK(weight_at(h, 1.0) == 6);
    CHECK(h.t_shot == 445e-6);

    MaxCutInstance c5{5, {}, "", std::nullopt};
    for (int i = 0; i < 5; ++i) c5.edges.push_back({i, (i + 1) % 5, 1.0});
    const auto h5 = exact_random_ar_distribution(c5, 1.0);
    CHECK(h5.total() == 32);
    CHECK(success_prob(h5, 1.0) == Approx(10.0 / 32));

    MaxCutInstance big{27, {}, "", std::nullopt};
    CHECK_THROWS_AS(exact_random_ar_distribution(big), ResourceLimit);
}

TEST_CASE("binomial hamming baseline") {
    const auto h1 = binomial_hamming_baseline(1);
    CHECK(success_prob(h1, 1.0) == 0.5);
    CHECK(weight_at(h1, 0.0) / h1.total() == 0.5);
    const auto h2 = binomial_hamming_baseline(2);
    CHECK(weight_at(h2, 1.0) / h2.total() == 0.25);
    CHECK(weight_at(h2, 0.5) / h2.total() == 0.5);
    CHECK(weight_at(h2, 0.0) / h2.total() == 0.25);
    const auto h36 = binomial_hamming_baseline(36);
    CHECK(success_prob(h36, 1.0) == std::ldexp(1.0, -36));
    double s = 0;
    for (const auto& e : h36.entries) s += e.second / h36.total();
    CHECK(s == Approx(1.0).margin(1e-12));
}

TEST_CASE("extrapolation fit") {
    std::vector<std::pair<double, double>> pts;
    for (double x : {0.5, 0.6, 0.7, 0.8, 0.9}) pts.push_back({x, std::exp(2 * x * x + x + 0.5)});
    const auto f = fit_tts_extrapolation(pts);
    CHECK(f.a == Approx(2.0).margin(1e-9));
    CHECK(f.b == Approx(1.0).margin(1e-9));
    CHECK(f.c == Approx(0.5).margin(1e-9));
    CHECK(f(1.0) == Approx(std::exp(3.5)).epsilon(1e-9));

    const auto k = fit_tts_extrapolation({{0.1, 7.0}, {0.4, 7.0}, {0.8, 7.0}});
    CHECK(k.a == Approx(0.0).margin(1e-9));
    CHECK(k.b == Approx(0.0).margin(1e-9));
    CHECK(k.c == Approx(std::log(7.0)).margin(1e-9));

    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(fit_tts_extrapolation({{0.1, 1.0}, {0.2, 2.0}}), InvalidArgument);
    CHECK_THROWS_AS(fit_tts_extrapolation({{0.1, 1.0}, {0.2, 2.0}, {0.3, inf}}), InvalidArgument);
    CHECK_THROWS_AS(fit_tts_extrapolation({{0.1, 1.0}, {0.2, 2.0}, {0.3, 0.0}}), InvalidArgument);
}

TEST_CASE("quality histogram json") {
    QualityHistogram h{{{0.5, 2}, {1.0, 3.5}}, 0.25};
    const QualityHistogram back = nlohmann::json(h).get<QualityHistogram>();
    CHECK(back.entries == h.entries);
    CHECK(back.t_shot == h.t_shot);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"entries": []})").get<QualityHistogram>(), SchemaError);
}
