#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbench/bits.hpp"
#include "qbench/generators/chemistry.hpp"
#include "qbench/generators/faa.hpp"
#include "qbench/generators/fixed_angles.hpp"
#include "qbench/generators/hidden_shift.hpp"
#include "qbench/generators/mps_loading.hpp"
#include "qbench/generators/qaoa.hpp"
#include "qbench/generators/qft_challenges.hpp"
#include "qbench/harness/backend.hpp"
#include "qbench/harness/graphs.hpp"
#include "qbench/harness/instance_io.hpp"
#include "qbench/harness/report.hpp"
#include "qbench/scoring.hpp"

namespace qbench {

enum class Family { qaoa, lr_qaoa, cosine_qft, hidden_phase_qft, hidden_shift, faa, mps_load, chemistry };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> v = {
        {Family::qaoa, "qaoa"},
        {Family::lr_qaoa, "lr-qaoa"},
        {Family::cosine_qft, "cosine-qft"},
        {Family::hidden_phase_qft, "hidden-phase-qft"},
        {Family::hidden_shift, "hidden-shift"},
        {Family::faa, "faa"},
        {Family::mps_load, "mps-load"},
        {Family::chemistry, "chemistry"}};
    return v;
}

inline std::string family_name(Family f) {
    for (const auto& [k, s] : family_names())
        if (k == f) return s;
    return "?";
}

inline Family family_from_name(const std::string& s) {
    for (const auto& [k, n] : family_names())
        if (n == s) return k;
    throw UnsupportedFamily("unknown benchmark family '" + s + "'");
}

// sizes: vertices (qaoa, lr-qaoa), qubits (qft, hidden shift), search qubits
// (faa); ignored for mps-load and chemistry, whose size comes from the instance.
// depths: p (qaoa, lr-qaoa), D (mps-load); ignored elsewhere.
struct RunPlan {
    Family family = Family::qaoa;
    std::vector<int> sizes = {8};
    std::vector<int> depths = {1};
    std::vector<std::uint64_t> shots = {1000};
    std::vector<std::uint64_t> seeds = {1};
    std::string backend = "ideal";
    std::optional<std::string> instance_path; // maxcut, image or chemistry document, or a .pgm
    int degree = 3;                            // qaoa graphs
    PermutationFamily permutation = PermutationFamily::cx_ladder;
    int random_cx_count = 50;
    int cap = default_qubit_cap();

    void validate() const {
        require(!sizes.empty() && !depths.empty() && !shots.empty() && !seeds.empty(), "run plan grids must be non-empty");
        for (auto s : shots) require(s >= 1, "shot counts must be positive");
        for (int d : depths) require(d >= 1, "depths must be positive");
        if (family != Family::mps_load && family != Family::chemistry)
            for (int n : sizes) require(n >= 1, "sizes must be positive");
        parse_backend(backend);
        if (family == Family::qaoa)
            for (int p : depths)
                require(p <= max_fixed_angle_depth(degree), "no fixed angles for depth " + std::to_string(p));
    }
};

namespace detail {

inline std::string hidden_shift_label(PermutationFamily f, int cx_count) {
    switch (f) {
    case PermutationFamily::cx_ladder: return "cx ladder";
    case PermutationFamily::ccx_ladder: return "ccx ladder";
    case PermutationFamily::mcx: return "mcx";
    case PermutationFamily::random_cx: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "random %03d cx", cx_count);
        return buf;
    }
    }
    return "?";
}

struct RowSink {
    Backend& backend;
    BenchmarkResult row;
    std::uint64_t next_seed;

    ShotHistogram run(const Circuit& c, std::uint64_t shots) {
        const auto cen = gate_census(c);
        row.n_1q += cen.n_1q;
        row.n_2q += cen.n_2q;
        row.n_circuits += 1;
        row.shots += shots;
        auto r = backend.execute(c, shots, mix_seed(next_seed++));
        row.exec_time_s += r.exec_time_s;
        if (r.energy_kwh) row.energy_kwh = row.energy_kwh.value_or(0.0) + *r.energy_kwh;
        return std::move(r.hist);
    }
};

inline ImageSpec plan_image(const RunPlan& plan) {
    if (!plan.instance_path) return load_pgm(data_dir() + "/images/digit5_32.pgm");
    const std::string& p = *plan.instance_path;
    if (p.size() > 4 && p.substr(p.size() - 4) == ".pgm") return load_pgm(p);
    return std::get<ImageSpec>(decode_payload(load_instance(p)));
}

inline ChemInstance plan_chemistry(const RunPlan& plan) {
    const std::string p = plan.instance_path.value_or(data_dir() + "/instances/h002_chain_1_25.json");
    return std::get<ChemInstance>(decode_payload(load_instance(p)));
}

inline std::string short_name(const std::string& path) {
    const auto slash = path.find_last_of('/');
    std::string s = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = s.find_last_of('.');
    return dot == std::string::npos ? s : s.substr(0, dot);
}

} // namespace detail

// One row per (size, depth, shots, seed) cell of the plan grid that applies to
// the family. A failing row is recorded with its error and the run continues.
inline std::vector<BenchmarkResult> run(const RunPlan& plan) {
    plan.validate();
    const BackendRef ref = parse_backend(plan.backend);
    auto backend = make_backend(ref, plan.cap);

    const bool uses_sizes = plan.family != Family::mps_load && plan.family != Family::chemistry;
    const bool uses_depths = plan.family == Family::qaoa || plan.family == Family::lr_qaoa || plan.family == Family::mps_load;
    const std::vector<int> sizes = uses_sizes ? plan.sizes : std::vector<int>{0};
    const std::vector<int> depths = uses_depths ? plan.depths : std::vector<int>{0};

    std::vector<BenchmarkResult> rows;
    for (int n : sizes)
        for (int depth : depths)
            for (std::uint64_t shots : plan.shots)
                for (std::uint64_t seed : plan.seeds) {
                    detail::RowSink sink{*backend, {}, mix_seed(seed, static_cast<std::uint64_t>(n) * 1000 + depth)};
                    BenchmarkResult& r = sink.row;
                    r.backend = backend->label();
                    r.depth = depth;
                    r.seed = seed;
                    r.n_qubits = n;
                    try {
                        switch (plan.family) {
                        case Family::qaoa:
                        case Family::lr_qaoa: {
                            const bool lr = plan.family == Family::lr_qaoa;
                            r.domain = "optimization";
                            r.problem = "maxcut";
                            r.algorithm = lr ? "lr-qaoa" : "qaoa";
                            MaxCutInstance g;
                            if (plan.instance_path) {
                                g = std::get<MaxCutInstance>(decode_payload(load_instance(*plan.instance_path)));
                                r.instance = detail::short_name(*plan.instance_path);
                            } else {
                                g = lr ? gen_fcw_graph(n, seed) : gen_regular_graph(n, plan.degree, seed);
                                r.instance = (lr ? "fcw_" : std::to_string(plan.degree) + "reg_") + std::to_string(n) +
                                             "_s" + std::to_string(seed);
                            }
                            r.n_qubits = g.n;
                            max_cut_exact(g);
                            const QaoaAngles a = lr ? lr_qaoa_schedule({1.25, 1.25, depth})
                                                    : fixed_angles(g.family == "4-regular" ? 4 : plan.degree, depth);
                            r.score = approximation_ratio(sink.run(gen_qaoa_maxcut(g, a), shots), g).value;
                            break;
                        }
                        case Family::cosine_qft: {
                            r.domain = "qft";
                            r.problem = "qft";
                            r.algorithm = "cosine qft";
                            const auto ch = gen_cosine_qft(n, default_cosine_frequency(n));
                            r.instance = "cosine_n" + std::to_string(n);
                            r.score = hellinger_fidelity(sink.run(ch.circuit, shots), ch.reference);
                            break;
                        }
                        case Family::hidden_phase_qft: {
                            r.domain = "qft";
                            r.problem = "qft";
                            r.algorithm = "qft hidden phase";
                            // k* uniform in [2^floor(n/2), 2^n)
                            const std::uint64_t lo = std::uint64_t{1} << (n / 2), hi = std::uint64_t{1} << n;
                            std::mt19937_64 rng(mix_seed(seed, 7));
                            const auto k = static_cast<std::int64_t>(lo + uniform_below(rng, hi - lo));
                            const auto ch = gen_hidden_phase_qft(n, k);
                            r.n_qubits = n + 1;
                            r.instance = "hidden_phase_n" + std::to_string(n) + "_k" + std::to_string(k);
                            r.score = hellinger_fidelity(sink.run(ch.circuit, shots), ch.reference);
                            break;
                        }
                        case Family::hidden_shift: {
                            r.domain = "hidden shift";
                            r.problem = detail::hidden_shift_label(plan.permutation, plan.random_cx_count);
                            r.algorithm = "hidden shift";
                            r.instance = "hs_" + family_name(plan.permutation) + "_n" + std::to_string(n);
                            std::vector<ShotHistogram> hs;
                            std::vector<std::uint64_t> shifts;
                            const int m = n / 2;
                            if (plan.permutation == PermutationFamily::random_cx) {
                                // three shifts x three random permutations
                                for (int pi = 0; pi < 3; ++pi) {
                                    const auto perm = gen_permutation(plan.permutation, m, plan.random_cx_count,
                                                                      mix_seed(seed, 100 + pi));
                                    for (int si = 0; si < 3; ++si) {
                                        const auto s = draw_shift(n, mix_seed(seed, 200 + si));
                                        hs.push_back(sink.run(gen_hidden_shift(HiddenShiftSpec::make(n, s, perm)), shots));
                                        shifts.push_back(s);
                                    }
                                }
                            } else {
                                const auto perm = gen_permutation(plan.permutation, m);
                                for (int i = 0; i < 10; ++i) {
                                    const auto s = draw_shift(n, mix_seed(seed, 200 + i));
                                    hs.push_back(sink.run(gen_hidden_shift(HiddenShiftSpec::make(n, s, perm)), shots));
                                    shifts.push_back(s);
                                }
                            }
                            r.score = hidden_shift_score(hs, shifts).value;
                            break;
                        }
                        case Family::faa: {
                            r.domain = "unstructured search";
                            r.problem = "faa";
                            r.algorithm = "faa";
                            r.instance = "faa_n" + std::to_string(n);
                            require(n <= 12, "FAA rows sweep every target; n is limited to 12");
                            const double p_max = faa_p_max(n);
                            double total = 0.0;
                            const std::uint64_t targets = std::uint64_t{1} << n;
                            for (std::uint64_t t = 0; t < targets; ++t) {
                                const auto c = gen_faa(FaaSpec{n, t});
                                total += faa_score(sink.run(c, shots), t, p_max).value;
                            }
                            r.n_qubits = faa_num_qubits(n);
                            r.score = total / static_cast<double>(targets);
                            break;
                        }
                        case Family::mps_load: {
                            r.domain = "machine learning";
                            r.problem = "img loading";
                            r.algorithm = "mps load";
                            const ImageSpec img = detail::plan_image(plan);
                            r.instance = img.source.empty() ? "image" : detail::short_name(img.source);
                            r.n_qubits = img.num_qubits();
                            r.score = mse_score(sink.run(gen_mps_loading(img, depth), shots), img).value;
                            break;
                        }
                        case Family::chemistry: {
                            r.domain = "chemistry";
                            r.problem = "hydrogen chain";
                            r.algorithm = "vqe puccd";
                            const ChemInstance inst = detail::plan_chemistry(plan);
                            r.instance = inst.instance_name;
                            r.n_qubits = inst.num_qubits;
                            const auto cs = gen_pucc_circuits(inst);
                            const auto hz = sink.run(cs.z, shots);
                            const auto hx = sink.run(cs.x, shots);
                            const auto hy = sink.run(cs.y, shots);
                            r.score = chem_energy(inst, hz, hx, hy).score.value;
                            break;
                        }
                        }
                        r.em = backend->error_mitigation();
                        require(std::isfinite(r.score), "score is not finite");
                    } catch (const std::exception& e) {
                        r.error = e.what();
                        r.score = std::numeric_limits<double>::quiet_NaN();
                    }
                    rows.push_back(std::move(r));
                }
    return rows;
}

inline std::vector<BenchmarkResult> run_all(const std::vector<RunPlan>& plans) {
    for (const auto& p : plans) p.validate();
    std::vector<BenchmarkResult> out;
    for (const auto& p : plans) {
        auto rows = run(p);
        out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    return out;
}

// Small cross-family plan used by `qbench run --demo` and the determinism check.
inline std::vector<RunPlan> demo_plan(const std::string& backend = "ideal") {
    std::vector<RunPlan> v;
    auto add = [&](Family f, std::vector<int> sizes, std::vector<int> depths, std::uint64_t shots) {
        RunPlan p;
        p.family = f;
        p.sizes = std::move(sizes);
        p.depths = std::move(depths);
        p.shots = {shots};
        p.seeds = {1, 2};
        p.backend = backend;
        v.push_back(p);
        return &v.back();
    };
    add(Family::qaoa, {8}, {1, 2, 3}, 1000);
    add(Family::lr_qaoa, {6}, {1, 2, 4}, 1000);
    add(Family::cosine_qft, {4, 6}, {1}, 500);
    add(Family::hidden_phase_qft, {4, 6}, {1}, 500);
    add(Family::hidden_shift, {6}, {1}, 200);
    add(Family::hidden_shift, {6}, {1}, 200)->permutation = PermutationFamily::random_cx;
    add(Family::faa, {3}, {1}, 200);
    add(Family::mps_load, {0}, {1, 2}, 2000);
    add(Family::chemistry, {0}, {1}, 1000);
    return v;
}

} // namespace qbench
