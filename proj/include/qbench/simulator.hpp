#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbench/bits.hpp"
#include "qbench/circuit.hpp"
#include "qbench/errors.hpp"

namespace qbench {

using cplx = std::complex<double>;

inline int default_qubit_cap() {
    if (const char* env = std::getenv("QBENCH_QUBIT_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 40) return static_cast<int>(v);
        throw InvalidArgument(std::string("QBENCH_QUBIT_CAP is not a qubit count: ") + env);
    }
    return 24;
}

class StateVector {
public:
    explicit StateVector(int num_qubits, int cap = default_qubit_cap()) : n_(num_qubits) {
        require(num_qubits >= 1, "state needs at least one qubit");
        require<ResourceLimit>(num_qubits <= cap, std::to_string(num_qubits) + " qubits exceeds the simulator cap of " +
                                                      std::to_string(cap));
        amp_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
        amp_[0] = 1.0;
    }

    static StateVector basis(int num_qubits, std::uint64_t index) {
        StateVector s(num_qubits);
        require(index < s.dim(), "basis index out of range");
        s.amp_[0] = 0.0;
        s.amp_[index] = 1.0;
        return s;
    }

    static StateVector from_amplitudes(std::vector<cplx> amps) {
        const std::size_t d = amps.size();
        require(d >= 2 && (d & (d - 1)) == 0, "amplitude vector length must be a power of two");
        StateVector s(std::countr_zero(d));
        s.amp_ = std::move(amps);
        return s;
    }

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    std::vector<cplx>& amplitudes() { return amp_; }
    cplx operator[](std::size_t i) const { return amp_[i]; }

    double norm_squared() const {
        double s = 0.0;
        for (const cplx& a : amp_) s += std::norm(a);
        return s;
    }

    void apply(const Gate& g) {
        for (int q : g.qubits) require(q < n_, "gate qubit out of range for state");
        const auto& q = g.qubits;
        switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            apply_1q(q[0], {cplx(r), cplx(r), cplx(r), cplx(-r)});
            break;
        }
        case GateKind::X: apply_1q(q[0], {0.0, 1.0, 1.0, 0.0}); break;
        case GateKind::Y: apply_1q(q[0], {0.0, cplx(0, -1), cplx(0, 1), 0.0}); break;
        case GateKind::Z: apply_1q(q[0], {1.0, 0.0, 0.0, -1.0}); break;
        case GateKind::RX: {
            const double c = std::cos(*g.angle / 2), s = std::sin(*g.angle / 2);
            apply_1q(q[0], {c, cplx(0, -s), cplx(0, -s), c});
            break;
        }
        case GateKind::RY: {
            const double c = std::cos(*g.angle / 2), s = std::sin(*g.angle / 2);
            apply_1q(q[0], {c, -s, s, c});
            break;
        }
        case GateKind::RZ: {
            const cplx e = std::polar(1.0, *g.angle / 2);
            apply_1q(q[0], {std::conj(e), 0.0, 0.0, e});
            break;
        }
        case GateKind::RZZ: {
            const cplx e = std::polar(1.0, *g.angle / 2);
            apply_diag_2q(q[0], q[1], {std::conj(e), e, e, std::conj(e)});
            break;
        }
        case GateKind::CPHASE: apply_diag_2q(q[0], q[1], {1.0, 1.0, 1.0, std::polar(1.0, *g.angle)}); break;
        case GateKind::CZ: apply_diag_2q(q[0], q[1], {1.0, 1.0, 1.0, -1.0}); break;
        case GateKind::RXX: apply_pair_rotation(q[0], q[1], *g.angle, false); break;
        case GateKind::RYY: apply_pair_rotation(q[0], q[1], *g.angle, true); break;
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: apply_mcx(g.qubits); break;
        case GateKind::SWAP: {
            const std::size_t ma = std::size_t{1} << q[0], mb = std::size_t{1} << q[1];
            for (std::size_t i = 0; i < amp_.size(); ++i)
                if ((i & ma) && !(i & mb)) std::swap(amp_[i], amp_[i ^ ma ^ mb]);
            break;
        }
        default:
            throw InvalidArgument("simulator does not implement gate kind");
        }
    }

    // Pauli by index 0=I,1=X,2=Y,3=Z.
    void apply_pauli(int q, int p) {
        if (p == 1) apply(Gate::x(q));
        else if (p == 2) apply(Gate::y(q));
        else if (p == 3) apply(Gate::z(q));
    }

    // m = {m00, m01, m10, m11}, row-major on (out, in).
    void apply_1q(int q, const std::array<cplx, 4>& m) {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            if (i & mask) continue;
            const cplx a0 = amp_[i], a1 = amp_[i | mask];
            amp_[i] = m[0] * a0 + m[1] * a1;
            amp_[i | mask] = m[2] * a0 + m[3] * a1;
        }
    }

    // d is indexed by bit_a + 2*bit_b.
    void apply_diag_2q(int a, int b, const std::array<cplx, 4>& d) {
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            const int k = static_cast<int>((i >> a) & 1u) | (static_cast<int>((i >> b) & 1u) << 1);
            if (d[static_cast<std::size_t>(k)] != cplx(1.0)) amp_[i] *= d[static_cast<std::size_t>(k)];
        }
    }

private:
    // exp(-i t/2 PP) for P = X or Y. Pairs (00,11) and (01,10) mix.
    void apply_pair_rotation(int a, int b, double t, bool yy) {
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        const std::size_t ma = std::size_t{1} << a, mb = std::size_t{1} << b;
        // XX: 00<->11 and 01<->10 both with -i s.  YY: 00<->11 with +i s, 01<->10 with -i s.
        const cplx k_same = yy ? cplx(0, s) : cplx(0, -s);
        const cplx k_diff(0, -s);
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            if ((i & ma) || (i & mb)) continue;
            const std::size_t i00 = i, i11 = i | ma | mb, i01 = i | ma, i10 = i | mb;
            const cplx x00 = amp_[i00], x11 = amp_[i11], x01 = amp_[i01], x10 = amp_[i10];
            amp_[i00] = c * x00 + k_same * x11;
            amp_[i11] = c * x11 + k_same * x00;
            amp_[i01] = c * x01 + k_diff * x10;
            amp_[i10] = c * x10 + k_diff * x01;
        }
    }

    void apply_mcx(const std::vector<int>& qs) {
        std::size_t cmask = 0;
        for (std::size_t k = 0; k + 1 < qs.size(); ++k) cmask |= std::size_t{1} << qs[k];
        const std::size_t tmask = std::size_t{1} << qs.back();
        for (std::size_t i = 0; i < amp_.size(); ++i)
            if ((i & cmask) == cmask && !(i & tmask)) std::swap(amp_[i], amp_[i | tmask]);
    }

    int n_;
    std::vector<cplx> amp_;
};

inline StateVector simulate(const Circuit& c, int cap = default_qubit_cap()) {
    StateVector s(c.num_qubits(), cap);
    for (const Gate& g : c.gates()) s.apply(g);
    return s;
}

inline StateVector simulate(const Circuit& c, StateVector s) {
    require(s.num_qubits() == c.num_qubits(), "state width does not match circuit");
    for (const Gate& g : c.gates()) s.apply(g);
    return s;
}

// Sparse, sorted by outcome index. Entries are strictly positive.
class OutcomeDistribution {
public:
    OutcomeDistribution() = default;
    OutcomeDistribution(int num_bits, std::vector<std::pair<std::uint64_t, double>> entries)
        : bits_(num_bits), entries_(std::move(entries)) {
        require(num_bits >= 1 && num_bits <= 64, "distribution width must be 1..64 bits");
        std::sort(entries_.begin(), entries_.end());
        double total = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            require(entries_[i].second >= 0.0 && std::isfinite(entries_[i].second), "probabilities must be >= 0");
            require(num_bits == 64 || entries_[i].first < (std::uint64_t{1} << num_bits), "outcome out of range");
            require(i == 0 || entries_[i].first != entries_[i - 1].first, "duplicate outcome");
            total += entries_[i].second;
        }
        std::erase_if(entries_, [](const auto& e) { return e.second == 0.0; });
        require(std::abs(total - 1.0) < 1e-9, "probabilities must sum to 1");
    }

    static OutcomeDistribution from_map(int num_bits, const std::map<std::uint64_t, double>& m) {
        return {num_bits, {m.begin(), m.end()}};
    }

    int num_bits() const { return bits_; }
    const std::vector<std::pair<std::uint64_t, double>>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }

    double probability(std::uint64_t outcome) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(outcome, -1.0));
        return (it != entries_.end() && it->first == outcome) ? it->second : 0.0;
    }
    double probability(const std::string& bits) const { return probability(from_bitstring(bits)); }

private:
    int bits_ = 1;
    std::vector<std::pair<std::uint64_t, double>> entries_;
};

inline std::uint64_t extract_bits(std::uint64_t index, const std::vector<int>& measured) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) out |= ((index >> measured[j]) & 1u) << j;
    return out;
}

inline OutcomeDistribution exact_distribution(const StateVector& s, const std::vector<int>& measured) {
    require(!measured.empty(), "measure at least one qubit");
    for (int q : measured) require(q >= 0 && q < s.num_qubits(), "measured qubit out of range");
    std::map<std::uint64_t, double> acc;
    double total = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double p = std::norm(s[i]);
        if (p == 0.0) continue;
        acc[extract_bits(i, measured)] += p;
        total += p;
    }
    std::vector<std::pair<std::uint64_t, double>> entries;
    entries.reserve(acc.size());
    // Renormalize away float drift accumulated over deep circuits.
    for (const auto& [k, p] : acc) entries.emplace_back(k, p / total);
    return {static_cast<int>(measured.size()), std::move(entries)};
}

inline OutcomeDistribution exact_distribution(const StateVector& s) {
    std::vector<int> all(static_cast<std::size_t>(s.num_qubits()));
    for (int q = 0; q < s.num_qubits(); ++q) all[static_cast<std::size_t>(q)] = q;
    return exact_distribution(s, all);
}

inline OutcomeDistribution ideal_distribution(const Circuit& c) {
    return exact_distribution(simulate(c), c.measured());
}

class ShotHistogram {
public:
    ShotHistogram() = default;
    explicit ShotHistogram(int num_bits) : bits_(num_bits) {
        require(num_bits >= 1 && num_bits <= 64, "histogram width must be 1..64 bits");
    }

    int num_bits() const { return bits_; }
    std::uint64_t shots() const { return shots_; }
    const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
    bool empty() const { return shots_ == 0; }

    void add(std::uint64_t outcome, std::uint64_t n = 1) {
        require(bits_ == 64 || outcome < (std::uint64_t{1} << bits_), "outcome wider than histogram");
        if (n == 0) return;
        counts_[outcome] += n;
        shots_ += n;
    }
    void merge(const ShotHistogram& o) {
        require(o.bits_ == bits_, "cannot merge histograms of different widths");
        for (const auto& [k, v] : o.counts_) add(k, v);
    }

    std::uint64_t count(std::uint64_t outcome) const {
        auto it = counts_.find(outcome);
        return it == counts_.end() ? 0 : it->second;
    }
    std::uint64_t count(const std::string& bits) const { return count(from_bitstring(bits)); }

    OutcomeDistribution normalized() const {
        require(shots_ > 0, "empty histogram");
        std::vector<std::pair<std::uint64_t, double>> e;
        for (const auto& [k, v] : counts_) e.emplace_back(k, static_cast<double>(v) / static_cast<double>(shots_));
        // Counts are exact integers, so only rounding can push the sum off 1.
        double total = 0.0;
        for (auto& x : e) total += x.second;
        for (auto& x : e) x.second /= total;
        return {bits_, std::move(e)};
    }

    friend bool operator==(const ShotHistogram&, const ShotHistogram&) = default;

private:
    int bits_ = 1;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, std::uint64_t> counts_;
};

inline void to_json(nlohmann::json& j, const ShotHistogram& h) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [k, v] : h.counts()) counts[to_bitstring(k, h.num_bits())] = v;
    j = nlohmann::json{{"shots", h.shots()}, {"counts", counts}};
}

inline void from_json(const nlohmann::json& j, ShotHistogram& h) {
    try {
        const auto& counts = j.at("counts");
        require<SchemaError>(counts.is_object(), "histogram counts must be an object");
        int width = 0;
        for (const auto& [key, _] : counts.items()) {
            require<SchemaError>(width == 0 || static_cast<int>(key.size()) == width,
                                 "histogram keys have different lengths");
            width = static_cast<int>(key.size());
        }
        if (j.contains("num_bits")) {
            const int declared = j.at("num_bits").get<int>();
            require<SchemaError>(width == 0 || declared == width, "num_bits does not match key length");
            width = declared;
        }
        require<SchemaError>(width >= 1, "histogram has no outcomes and no num_bits");
        ShotHistogram r(width);
        for (const auto& [key, v] : counts.items()) r.add(from_bitstring(key), v.get<std::uint64_t>());
        require<SchemaError>(r.shots() == j.at("shots").get<std::uint64_t>(), "counts do not sum to shots");
        h = std::move(r);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed histogram: ") + e.what());
    }
}

// Inverse-CDF multinomial draw. One engine draw per shot keeps the stream
// layout simple and reproducible across platforms.
inline ShotHistogram sample(const OutcomeDistribution& d, std::uint64_t shots, std::uint64_t seed) {
    require(shots >= 1, "sample needs at least one shot");
    require(d.support_size() > 0, "cannot sample an empty distribution");
    const auto& e = d.entries();
    std::vector<double> cdf(e.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) cdf[i] = (acc += e[i].second);
    std::vector<std::uint64_t> tally(e.size(), 0);
    std::mt19937_64 eng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(eng) * acc;
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        tally[std::min(idx, e.size() - 1)]++;
    }
    ShotHistogram h(d.num_bits());
    for (std::size_t i = 0; i < e.size(); ++i) h.add(e[i].first, tally[i]);
    return h;
}

inline double hellinger_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    require(p.num_bits() == q.num_bits(), "distributions are over different outcome spaces");
    require(p.support_size() > 0 && q.support_size() > 0, "empty distribution");
    double bc = 0.0;
    auto a = p.entries().begin(), b = q.entries().begin();
    while (a != p.entries().end() && b != q.entries().end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else {
            bc += std::sqrt(a->second * b->second);
            ++a;
            ++b;
        }
    }
    return std::clamp(bc * bc, 0.0, 1.0);
}

inline double hellinger_fidelity(const ShotHistogram& p, const OutcomeDistribution& q) {
    require(!p.empty(), "empty histogram");
    return hellinger_fidelity(p.normalized(), q);
}
inline double hellinger_fidelity(const OutcomeDistribution& p, const ShotHistogram& q) {
    return hellinger_fidelity(q, p);
}
inline double hellinger_fidelity(const ShotHistogram& p, const ShotHistogram& q) {
    require(!p.empty() && !q.empty(), "empty histogram");
    return hellinger_fidelity(p.normalized(), q.normalized());
}

} // namespace qbench
