#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include <unistd.h>

#include <json.hpp>

#include "qbench/bits.hpp"
#include "qbench/errors.hpp"
#include "qbench/noise.hpp"
#include "qbench/simulator.hpp"

namespace qbench {

struct ExecResult {
    ShotHistogram hist;
    double exec_time_s = 0.0;
    std::optional<double> energy_kwh;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual ExecResult execute(const Circuit& c, std::uint64_t shots, std::uint64_t seed) = 0;
    virtual std::string label() const = 0;
    virtual bool error_mitigation() const { return false; }
};

struct BackendRef {
    enum class Kind { ideal_sim, noisy_sim, random_sampler, external };
    Kind kind = Kind::ideal_sim;
    NoiseModel noise; // seed is replaced per execution
    std::string adapter;
    std::string label = "ideal";
};

// "ideal", "noisy:p1,p2", "random", "external:<command>"
inline BackendRef parse_backend(const std::string& spec) {
    BackendRef r;
    if (spec == "ideal") return r;
    if (spec == "random") {
        r.kind = BackendRef::Kind::random_sampler;
        r.label = "random";
        return r;
    }
    if (spec.rfind("noisy:", 0) == 0) {
        const std::string rest = spec.substr(6);
        const auto comma = rest.find(',');
        require(comma != std::string::npos, "noisy backend expects noisy:p1,p2");
        r.kind = BackendRef::Kind::noisy_sim;
        try {
            std::size_t used = 0;
            r.noise.p1 = std::stod(rest.substr(0, comma), &used);
            require(used == comma, "bad p1 in " + spec);
            const std::string p2 = rest.substr(comma + 1);
            r.noise.p2 = std::stod(p2, &used);
            require(used == p2.size(), "bad p2 in " + spec);
        } catch (const std::logic_error&) {
            throw InvalidArgument("cannot parse noise rates in " + spec);
        }
        r.noise.validate();
        r.label = spec;
        return r;
    }
    if (spec.rfind("external:", 0) == 0) {
        r.kind = BackendRef::Kind::external;
        r.adapter = spec.substr(9);
        require(!r.adapter.empty(), "external backend needs a command");
        r.label = "external";
        return r;
    }
    throw InvalidArgument("unknown backend '" + spec + "' (ideal | noisy:p1,p2 | random | external:cmd)");
}

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

} // namespace detail

class IdealBackend : public Backend {
public:
    explicit IdealBackend(int cap = default_qubit_cap()) : cap_(cap) {}
    ExecResult execute(const Circuit& c, std::uint64_t shots, std::uint64_t seed) override {
        detail::Stopwatch sw;
        auto d = exact_distribution(simulate(c, cap_), c.measured());
        auto h = sample(d, shots, seed);
        return {std::move(h), sw.seconds(), std::nullopt};
    }
    std::string label() const override { return "ideal"; }

private:
    int cap_;
};

class NoisyBackend : public Backend {
public:
    NoisyBackend(NoiseModel nm, std::string label, int cap = default_qubit_cap())
        : nm_(nm), label_(std::move(label)), cap_(cap) {
        nm_.validate();
    }
    ExecResult execute(const Circuit& c, std::uint64_t shots, std::uint64_t seed) override {
        detail::Stopwatch sw;
        NoiseModel nm = nm_;
        nm.seed = seed;
        auto h = simulate_noisy(c, nm, shots, cap_);
        return {std::move(h), sw.seconds(), std::nullopt};
    }
    std::string label() const override { return label_; }

private:
    NoiseModel nm_;
    std::string label_;
    int cap_;
};

// Uniform bitstrings over the measured register; the circuit is not simulated.
class RandomBackend : public Backend {
public:
    ExecResult execute(const Circuit& c, std::uint64_t shots, std::uint64_t seed) override {
        detail::Stopwatch sw;
        const int m = c.num_measured();
        require(m <= 63, "random sampler supports at most 63 measured bits");
        std::mt19937_64 rng(seed);
        ShotHistogram h(m);
        for (std::uint64_t s = 0; s < shots; ++s) h.add(uniform_below(rng, std::uint64_t{1} << m));
        return {std::move(h), sw.seconds(), std::nullopt};
    }
    std::string label() const override { return "random"; }
};

// Runs `<command> <circuit.json> <shots> <seed>` through the shell and reads a
// ShotHistogram JSON object from its stdout. Optional keys "exec_time_s",
// "energy_kwh" and "em" are passed through.
class ExternalBackend : public Backend {
public:
    explicit ExternalBackend(std::string command) : cmd_(std::move(command)) {}

    ExecResult execute(const Circuit& c, std::uint64_t shots, std::uint64_t seed) override {
        static std::atomic<unsigned> counter{0};
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path();
        const std::string stem = "qbench_ext_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
        const fs::path in = dir / (stem + "_circuit.json"), out = dir / (stem + "_hist.json");
        {
            std::ofstream f(in);
            if (!f) throw IoError("cannot write " + in.string());
            f << nlohmann::json(c).dump();
        }
        detail::Stopwatch sw;
        const std::string line = cmd_ + " '" + in.string() + "' " + std::to_string(shots) + " " +
                                 std::to_string(seed) + " > '" + out.string() + "'";
        const int rc = std::system(line.c_str());
        const double wall = sw.seconds();
        std::error_code ec;
        fs::remove(in, ec);
        nlohmann::json j;
        {
            std::ifstream f(out);
            if (rc != 0 || !f) {
                fs::remove(out, ec);
                throw IoError("external backend '" + cmd_ + "' failed with status " + std::to_string(rc));
            }
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception& e) {
                fs::remove(out, ec);
                throw SchemaError(std::string("external backend output: ") + e.what());
            }
        }
        fs::remove(out, ec);
        ExecResult r{j.get<ShotHistogram>(), j.value("exec_time_s", wall), std::nullopt};
        if (j.contains("energy_kwh") && !j.at("energy_kwh").is_null()) r.energy_kwh = j.at("energy_kwh").get<double>();
        em_ = em_ || j.value("em", false);
        require<SchemaError>(r.hist.num_bits() == c.num_measured(),
                             "external histogram width does not match the measured register");
        return r;
    }
    std::string label() const override { return "external:" + cmd_; }
    bool error_mitigation() const override { return em_; }

private:
    std::string cmd_;
    bool em_ = false;
};

inline std::unique_ptr<Backend> make_backend(const BackendRef& ref, int cap = default_qubit_cap()) {
    switch (ref.kind) {
    case BackendRef::Kind::ideal_sim: return std::make_unique<IdealBackend>(cap);
    case BackendRef::Kind::noisy_sim: return std::make_unique<NoisyBackend>(ref.noise, ref.label, cap);
    case BackendRef::Kind::random_sampler: return std::make_unique<RandomBackend>();
    case BackendRef::Kind::external: return std::make_unique<ExternalBackend>(ref.adapter);
    }
    throw InvalidArgument("unknown backend kind");
}

} // namespace qbench
