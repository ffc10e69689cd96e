#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbench/errors.hpp"

namespace qbench {

enum class GateKind { H, X, Y, Z, RX, RY, RZ, RXX, RYY, RZZ, CPHASE, CX, CZ, SWAP, CCX, MCX };

inline constexpr GateKind all_gate_kinds[] = {
    GateKind::H,   GateKind::X,   GateKind::Y,      GateKind::Z,  GateKind::RX, GateKind::RY,
    GateKind::RZ,  GateKind::RXX, GateKind::RYY,    GateKind::RZZ, GateKind::CPHASE,
    GateKind::CX,  GateKind::CZ,  GateKind::SWAP,   GateKind::CCX, GateKind::MCX};

inline std::string_view kind_name(GateKind k) {
    switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::RXX: return "rxx";
    case GateKind::RYY: return "ryy";
    case GateKind::RZZ: return "rzz";
    case GateKind::CPHASE: return "cphase";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
    }
    throw InvalidArgument("unknown gate kind");
}

inline GateKind kind_from_name(std::string_view s) {
    for (GateKind k : all_gate_kinds)
        if (kind_name(k) == s) return k;
    throw InvalidArgument("unknown gate kind '" + std::string(s) + "'");
}

inline bool is_parameterized(GateKind k) {
    switch (k) {
    case GateKind::RX: case GateKind::RY: case GateKind::RZ:
    case GateKind::RXX: case GateKind::RYY: case GateKind::RZZ:
    case GateKind::CPHASE:
        return true;
    default:
        return false;
    }
}

// Fixed arity, or 0 for MCX (any number of controls, at least one).
inline int kind_arity(GateKind k) {
    switch (k) {
    case GateKind::H: case GateKind::X: case GateKind::Y: case GateKind::Z:
    case GateKind::RX: case GateKind::RY: case GateKind::RZ:
        return 1;
    case GateKind::CCX:
        return 3;
    case GateKind::MCX:
        return 0;
    default:
        return 2;
    }
}

// qubits lists control(s) first, then the target. For the symmetric
// two-qubit kinds (RXX, RYY, RZZ, CPHASE, CZ, SWAP) order is irrelevant.
struct Gate {
    GateKind kind{GateKind::H};
    std::vector<int> qubits;
    std::optional<double> angle;

    static Gate make(GateKind k, std::vector<int> qs, std::optional<double> angle = std::nullopt) {
        Gate g{k, std::move(qs), angle};
        g.validate();
        return g;
    }

    static Gate h(int q) { return make(GateKind::H, {q}); }
    static Gate x(int q) { return make(GateKind::X, {q}); }
    static Gate y(int q) { return make(GateKind::Y, {q}); }
    static Gate z(int q) { return make(GateKind::Z, {q}); }
    static Gate rx(int q, double t) { return make(GateKind::RX, {q}, t); }
    static Gate ry(int q, double t) { return make(GateKind::RY, {q}, t); }
    static Gate rz(int q, double t) { return make(GateKind::RZ, {q}, t); }
    static Gate rxx(int a, int b, double t) { return make(GateKind::RXX, {a, b}, t); }
    static Gate ryy(int a, int b, double t) { return make(GateKind::RYY, {a, b}, t); }
    static Gate rzz(int a, int b, double t) { return make(GateKind::RZZ, {a, b}, t); }
    static Gate cphase(int a, int b, double t) { return make(GateKind::CPHASE, {a, b}, t); }
    static Gate cx(int c, int t) { return make(GateKind::CX, {c, t}); }
    static Gate cz(int a, int b) { return make(GateKind::CZ, {a, b}); }
    static Gate swap(int a, int b) { return make(GateKind::SWAP, {a, b}); }
    static Gate ccx(int c0, int c1, int t) { return make(GateKind::CCX, {c0, c1, t}); }
    static Gate mcx(std::vector<int> controls, int target) {
        controls.push_back(target);
        return make(GateKind::MCX, std::move(controls));
    }

    int target() const { return qubits.back(); }
    std::vector<int> controls() const { return {qubits.begin(), qubits.end() - 1}; }

    void validate() const {
        const int arity = kind_arity(kind);
        if (arity == 0)
            require(qubits.size() >= 2, "mcx needs at least one control and a target");
        else
            require(static_cast<int>(qubits.size()) == arity,
                    std::string(kind_name(kind)) + " expects " + std::to_string(arity) + " qubit(s)");
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            require(qubits[i] >= 0, "negative qubit index");
            for (std::size_t j = i + 1; j < qubits.size(); ++j)
                require(qubits[i] != qubits[j], "repeated qubit in " + std::string(kind_name(kind)));
        }
        if (is_parameterized(kind)) {
            require(angle.has_value(), std::string(kind_name(kind)) + " needs an angle");
            require(std::isfinite(*angle), "gate angle must be finite");
        } else {
            require(!angle.has_value(), std::string(kind_name(kind)) + " takes no angle");
        }
    }

    friend bool operator==(const Gate&, const Gate&) = default;
};

struct GateCensus {
    long long n_1q = 0;
    long long n_2q = 0;

    GateCensus& operator+=(const GateCensus& o) {
        n_1q += o.n_1q;
        n_2q += o.n_2q;
        return *this;
    }
    friend GateCensus operator+(GateCensus a, const GateCensus& b) { return a += b; }
    friend GateCensus operator*(long long k, const GateCensus& c) { return {k * c.n_1q, k * c.n_2q}; }
    friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        require(num_qubits >= 1, "circuit needs at least one qubit");
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    // Qubits read out at the end; empty means all of them in index order.
    // Outcome bit j is the value of measured()[j].
    const std::vector<int>& measured_qubits() const { return measured_; }
    std::vector<int> measured() const {
        if (!measured_.empty()) return measured_;
        std::vector<int> all;
        for (int q = 0; q < num_qubits_; ++q) all.push_back(q);
        return all;
    }
    int num_measured() const {
        return measured_.empty() ? num_qubits_ : static_cast<int>(measured_.size());
    }
    void set_measured(std::vector<int> qs) {
        for (std::size_t i = 0; i < qs.size(); ++i) {
            require(qs[i] >= 0 && qs[i] < num_qubits_, "measured qubit out of range");
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                require(qs[i] != qs[j], "measured qubit listed twice");
        }
        measured_ = std::move(qs);
    }

    std::map<std::string, std::string>& metadata() { return metadata_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    Circuit& add(Gate g) {
        g.validate();
        for (int q : g.qubits)
            require(q < num_qubits_, "gate touches qubit " + std::to_string(q) + " of a " +
                                         std::to_string(num_qubits_) + "-qubit circuit");
        gates_.push_back(std::move(g));
        return *this;
    }
    Circuit& add(const std::vector<Gate>& gs) {
        for (const Gate& g : gs) add(g);
        return *this;
    }
    // Appends another circuit's gates (it may be narrower than this one).
    Circuit& append(const Circuit& other) {
        require(other.num_qubits() <= num_qubits_, "appended circuit is wider than the target");
        for (const Gate& g : other.gates()) gates_.push_back(g);
        return *this;
    }

private:
    int num_qubits_ = 1;
    std::vector<Gate> gates_;
    std::vector<int> measured_;
    std::map<std::string, std::string> metadata_;
};

inline std::vector<int> qubit_range(int begin, int end) {
    std::vector<int> qs;
    for (int q = begin; q < end; ++q) qs.push_back(q);
    return qs;
}

inline Gate inverse(const Gate& g) {
    Gate r = g;
    if (r.angle) r.angle = -*r.angle;
    return r;
}

// Every gate kind in the alphabet is self-inverse or a rotation, so the
// inverse is the reversed sequence with negated angles.
inline Circuit inverse(const Circuit& c) {
    Circuit r(c.num_qubits());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) r.add(inverse(*it));
    r.set_measured(c.measured_qubits());
    r.metadata() = c.metadata();
    return r;
}

inline std::vector<Gate> inverse(const std::vector<Gate>& gs) {
    std::vector<Gate> r;
    r.reserve(gs.size());
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) r.push_back(inverse(*it));
    return r;
}

// QFT on the given qubits, qs[0] least significant:
// |k> -> N^{-1/2} sum_j exp(2 pi i jk/N) |j>, including the closing swaps.
inline std::vector<Gate> qft_gates(const std::vector<int>& qs) {
    const int n = static_cast<int>(qs.size());
    std::vector<Gate> out;
    for (int j = n - 1; j >= 0; --j) {
        out.push_back(Gate::h(qs[j]));
        for (int k = j - 1; k >= 0; --k)
            out.push_back(Gate::cphase(qs[k], qs[j], std::numbers::pi / static_cast<double>(1LL << (j - k))));
    }
    for (int i = 0; i < n / 2; ++i) out.push_back(Gate::swap(qs[i], qs[n - 1 - i]));
    return out;
}

inline Circuit build_qft(int n) {
    require(n >= 1, "build_qft needs n >= 1");
    Circuit c(n);
    c.add(qft_gates(qubit_range(0, n)));
    c.metadata()["family"] = "qft";
    return c;
}

// Draper addition of a constant: in the Fourier basis, adding a to the
// register is a phase 2 pi a 2^b / N on each qubit b. Global phase differs
// from the textbook phase gate because RZ is used.
inline std::vector<Gate> phase_add_gates(const std::vector<int>& qs, long long a) {
    const int n = static_cast<int>(qs.size());
    const double N = std::ldexp(1.0, n);
    std::vector<Gate> out;
    for (int b = 0; b < n; ++b) {
        const double theta = std::fmod(2.0 * std::numbers::pi * static_cast<double>(a) * std::ldexp(1.0, b) / N,
                                       2.0 * std::numbers::pi);
        if (theta != 0.0) out.push_back(Gate::rz(qs[b], theta));
    }
    return out;
}

struct McxLayout {
    std::vector<int> controls;
    int target = 0;
    std::vector<int> ancillas;
};

// v-chain (Toffoli chain) decomposition over clean ancillas.
inline std::vector<Gate> decompose_mcx(int n_controls, const McxLayout& layout) {
    require(n_controls >= 1, "decompose_mcx needs at least one control");
    require(static_cast<int>(layout.controls.size()) == n_controls, "control count does not match layout");
    const int need = std::max(0, n_controls - 2);
    require(static_cast<int>(layout.ancillas.size()) >= need,
            "v-chain with " + std::to_string(n_controls) + " controls needs " + std::to_string(need) +
                " ancillas");

    std::vector<int> all = layout.controls;
    all.push_back(layout.target);
    all.insert(all.end(), layout.ancillas.begin(), layout.ancillas.begin() + need);
    std::vector<int> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "mcx layout indices must be distinct");

    const auto& c = layout.controls;
    const auto& a = layout.ancillas;
    if (n_controls == 1) return {Gate::cx(c[0], layout.target)};
    if (n_controls == 2) return {Gate::ccx(c[0], c[1], layout.target)};

    std::vector<Gate> compute;
    compute.push_back(Gate::ccx(c[0], c[1], a[0]));
    for (int i = 2; i < n_controls - 1; ++i) compute.push_back(Gate::ccx(c[i], a[i - 2], a[i - 1]));

    std::vector<Gate> out = compute;
    out.push_back(Gate::ccx(c[n_controls - 1], a[n_controls - 3], layout.target));
    auto undo = inverse(compute);
    out.insert(out.end(), undo.begin(), undo.end());
    return out;
}

// Standard 6-CX Toffoli, T written as RZ(pi/4). Equal to CCX up to a global phase.
inline std::vector<Gate> expand_ccx(int c0, int c1, int t) {
    const double q = std::numbers::pi / 4.0;
    return {Gate::h(t),       Gate::cx(c1, t),  Gate::rz(t, -q), Gate::cx(c0, t),
            Gate::rz(t, q),   Gate::cx(c1, t),  Gate::rz(t, -q), Gate::cx(c0, t),
            Gate::rz(c1, q),  Gate::rz(t, q),   Gate::h(t),      Gate::cx(c0, c1),
            Gate::rz(c0, q),  Gate::rz(c1, -q), Gate::cx(c0, c1)};
}

inline GateCensus gate_census(const Gate& g);

inline GateCensus mcx_census(int n_controls) {
    // Census of the v-chain on a synthetic layout; one source of truth.
    McxLayout lay;
    for (int i = 0; i < n_controls; ++i) lay.controls.push_back(i);
    lay.target = n_controls;
    for (int i = 0; i < std::max(0, n_controls - 2); ++i) lay.ancillas.push_back(n_controls + 1 + i);
    GateCensus c;
    for (const Gate& g : decompose_mcx(n_controls, lay)) c += gate_census(g);
    return c;
}

inline GateCensus gate_census(const Gate& g) {
    switch (g.kind) {
    case GateKind::CCX:
        return {9, 6};
    case GateKind::MCX:
        return mcx_census(static_cast<int>(g.qubits.size()) - 1);
    default:
        return kind_arity(g.kind) == 1 ? GateCensus{1, 0} : GateCensus{0, 1};
    }
}

inline GateCensus gate_census(const Circuit& c) {
    GateCensus total;
    for (const Gate& g : c.gates()) total += gate_census(g);
    return total;
}

// Replaces every MCX with its v-chain and every CCX with the 6-CX form.
// Ancillas are appended above the widest existing register.
inline Circuit lower_to_two_qubit(const Circuit& c) {
    int max_controls = 0;
    for (const Gate& g : c.gates())
        if (g.kind == GateKind::MCX) max_controls = std::max(max_controls, static_cast<int>(g.qubits.size()) - 1);
    const int extra = std::max(0, max_controls - 2);
    Circuit out(c.num_qubits() + extra);
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::MCX) {
            McxLayout lay{g.controls(), g.target(), {}};
            for (int i = 0; i < extra; ++i) lay.ancillas.push_back(c.num_qubits() + i);
            for (const Gate& h : decompose_mcx(static_cast<int>(lay.controls.size()), lay)) {
                if (h.kind == GateKind::CCX) out.add(expand_ccx(h.qubits[0], h.qubits[1], h.qubits[2]));
                else out.add(h);
            }
        } else if (g.kind == GateKind::CCX) {
            out.add(expand_ccx(g.qubits[0], g.qubits[1], g.qubits[2]));
        } else {
            out.add(g);
        }
    }
    out.set_measured(c.measured());
    out.metadata() = c.metadata();
    return out;
}

inline void to_json(nlohmann::json& j, const Gate& g) {
    j = nlohmann::json{{"kind", kind_name(g.kind)}, {"qubits", g.qubits}};
    if (g.angle) j["angle"] = *g.angle;
}

inline void from_json(const nlohmann::json& j, Gate& g) {
    try {
        std::optional<double> angle;
        if (j.contains("angle") && !j.at("angle").is_null()) angle = j.at("angle").get<double>();
        g = Gate::make(kind_from_name(j.at("kind").get<std::string>()), j.at("qubits").get<std::vector<int>>(), angle);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed gate: ") + e.what());
    }
}

inline void to_json(nlohmann::json& j, const Circuit& c) {
    j = nlohmann::json{{"num_qubits", c.num_qubits()}, {"gates", c.gates()}};
    if (!c.measured_qubits().empty()) j["measured"] = c.measured_qubits();
    if (!c.metadata().empty()) j["metadata"] = c.metadata();
}

inline void from_json(const nlohmann::json& j, Circuit& c) {
    try {
        Circuit r(j.at("num_qubits").get<int>());
        for (const auto& gj : j.at("gates")) r.add(gj.get<Gate>());
        if (j.contains("measured")) r.set_measured(j.at("measured").get<std::vector<int>>());
        if (j.contains("metadata")) r.metadata() = j.at("metadata").get<std::map<std::string, std::string>>();
        c = std::move(r);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed circuit: ") + e.what());
    }
}

} // namespace qbench
