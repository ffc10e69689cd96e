#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qbench/circuit.hpp"
#include "qbench/simulator.hpp"

using namespace qbench;
using Catch::Approx;

TEST_CASE("gate validation") {
    CHECK_THROWS_AS(Gate::cx(1, 1), InvalidArgument);
    CHECK_THROWS_AS(Gate::make(GateKind::RX, {0}), InvalidArgument);
    CHECK_THROWS_AS(Gate::make(GateKind::H, {0}, 0.3), InvalidArgument);
    CHECK_THROWS_AS(Gate::rz(0, std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(Gate::make(GateKind::CCX, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Gate::mcx({}, 0), InvalidArgument);
    Circuit c(2);
    CHECK_THROWS_AS(c.add(Gate::h(2)), InvalidArgument);
    CHECK_THROWS_AS(Circuit(0), InvalidArgument);
}

TEST_CASE("build_qft small cases") {
    CHECK_THROWS_AS(build_qft(0), InvalidArgument);
    const Circuit one = build_qft(1);
    REQUIRE(one.size() == 1);
    CHECK(one.gates()[0].kind == GateKind::H);

    const auto d = ideal_distribution(build_qft(3));
    REQUIRE(d.support_size() == 8);
    for (const auto& [k, p] : d.entries()) CHECK(p == Approx(1.0 / 8).margin(1e-12));
}

TEST_CASE("build_qft matches the DFT matrix") {
    for (int n = 1; n <= 5; ++n) {
        const auto u = oracle::unitary(build_qft(n));
        CHECK((u - oracle::dft(n)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("qft followed by its inverse is the identity") {
    for (int n = 1; n <= 6; ++n) {
        const Circuit f = build_qft(n);
        Circuit round(n);
        round.append(f).append(inverse(f));
        for (std::uint64_t k = 0; k < (1u << n); ++k) {
            const auto s = simulate(round, StateVector::basis(n, k));
            CHECK(std::abs(s[k] - cplx(1.0)) < 1e-9);
        }
    }
}

TEST_CASE("decompose_mcx small cases") {
    auto one = decompose_mcx(1, {{0}, 1, {}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Gate::cx(0, 1));
    auto two = decompose_mcx(2, {{0, 1}, 2, {}});
    REQUIRE(two.size() == 1);
    CHECK(two[0] == Gate::ccx(0, 1, 2));
    CHECK_THROWS_AS(decompose_mcx(4, {{0, 1, 2, 3}, 4, {5}}), InvalidArgument);
    CHECK_THROWS_AS(decompose_mcx(3, {{0, 1, 2}, 2, {4}}), InvalidArgument);
    CHECK_THROWS_AS(decompose_mcx(0, {{}, 0, {}}), InvalidArgument);
}

TEST_CASE("decompose_mcx truth table with clean ancillas") {
    for (int k = 3; k <= 6; ++k) {
        McxLayout lay;
        // Interleave indices so the layout is not contiguous.
        for (int i = 0; i < k; ++i) lay.controls.push_back(2 * i);
        lay.target = 1;
        for (int i = 0; i < k - 2; ++i) lay.ancillas.push_back(2 * i + 3);
        const int n = 2 * k + 1;
        const auto gates = decompose_mcx(k, lay);
        for (const auto& g : gates) {
            CHECK((g.kind == GateKind::CX || g.kind == GateKind::CCX || kind_arity(g.kind) == 1));
            for (int q : g.qubits) {
                const bool declared = q == lay.target ||
                                      std::find(lay.controls.begin(), lay.controls.end(), q) != lay.controls.end() ||
                                      std::find(lay.ancillas.begin(), lay.ancillas.end(), q) != lay.ancillas.end();
                CHECK(declared);
            }
        }
        Circuit c(n);
        c.add(gates);
        for (std::uint64_t in = 0; in < (1u << (k + 1)); ++in) {
            std::uint64_t idx = 0;
            for (int i = 0; i < k; ++i) idx |= ((in >> i) & 1u) << lay.controls[i];
            const bool t = (in >> k) & 1u;
            idx |= std::uint64_t(t) << lay.target;
            const bool all = (in & ((1u << k) - 1)) == ((1u << k) - 1);
            const std::uint64_t expect = all ? (idx ^ (1u << lay.target)) : idx;
            const auto s = simulate(c, StateVector::basis(n, idx));
            CHECK(std::norm(s[expect]) == Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("expand_ccx equals CCX up to global phase") {
    const auto u = oracle::unitary(expand_ccx(0, 1, 2), 3);
    const auto ref = oracle::unitary({Gate::ccx(0, 1, 2)}, 3);
    CHECK(oracle::phase_distance(u, ref) < 1e-9);
    GateCensus c;
    for (const auto& g : expand_ccx(0, 1, 2)) c += gate_census(g);
    CHECK(c == GateCensus{9, 6});
}

TEST_CASE("gate census rules") {
    CHECK(gate_census(Circuit(3)) == GateCensus{0, 0});
    CHECK(gate_census(Gate::rzz(0, 1, 0.2)) == GateCensus{0, 1});
    CHECK(gate_census(Gate::ccx(0, 1, 2)) == GateCensus{9, 6});
    CHECK(gate_census(Gate::mcx({0}, 1)) == GateCensus{0, 1});
    CHECK(gate_census(Gate::mcx({0, 1}, 2)) == GateCensus{9, 6});
    // k controls -> 2k-3 Toffolis
    CHECK(gate_census(Gate::mcx({0, 1, 2, 3, 4}, 5)) == 7LL * GateCensus{9, 6});

    Circuit a(4), b(4);
    a.add(Gate::h(0)).add(Gate::cx(0, 1)).add(Gate::mcx({0, 1, 2}, 3));
    b.add(Gate::ccx(1, 2, 3)).add(Gate::rx(2, 0.1)).add(Gate::swap(0, 3));
    Circuit ab(4);
    ab.append(a).append(b);
    CHECK(gate_census(ab) == gate_census(a) + gate_census(b));
}

TEST_CASE("lower_to_two_qubit preserves the unitary on clean ancillas") {
    Circuit c(4);
    c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::h(2)).add(Gate::mcx({0, 1, 2}, 3)).add(Gate::ccx(3, 0, 1));
    const Circuit low = lower_to_two_qubit(c);
    CHECK(low.num_qubits() == 5);
    for (const auto& g : low.gates()) CHECK(g.qubits.size() <= 2);
    const auto d1 = ideal_distribution(c);
    const auto d2 = ideal_distribution(low);
    CHECK(hellinger_fidelity(d1, d2) == Approx(1.0).margin(1e-12));
}

TEST_CASE("circuit json round trip") {
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::rzz(0, 2, 0.25)).add(Gate::mcx({0, 1}, 2));
    c.set_measured({0, 2});
    c.metadata()["family"] = "demo";
    const nlohmann::json j = c;
    CHECK(j["gates"][1]["kind"] == "rzz");
    CHECK(j["gates"][1]["angle"] == 0.25);
    CHECK_FALSE(j["gates"][0].contains("angle"));
    const Circuit back = j.get<Circuit>();
    CHECK(back.gates() == c.gates());
    CHECK(back.measured_qubits() == c.measured_qubits());
    CHECK(back.metadata() == c.metadata());
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"num_qubits":2,"gates":[{"kind":"foo","qubits":[0]}]})").get<Circuit>(),
                    InvalidArgument);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"gates":[]})").get<Circuit>(), SchemaError);
}
