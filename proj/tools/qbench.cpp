// qbench command-line front end.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "qbench/qbench.hpp"

using namespace qbench;

namespace {

// "a..b", "a..b:step", "a,b,c" or "a"
template <class T>
std::vector<T> parse_grid(const std::string& s, T default_step) {
    std::vector<T> out;
    auto num = [&](const std::string& x) -> T {
        std::size_t used = 0;
        T v{};
        try {
            if constexpr (std::is_floating_point_v<T>) v = static_cast<T>(std::stod(x, &used));
            else v = static_cast<T>(std::stoll(x, &used));
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad number '" + x + "' in '" + s + "'");
        }
        require(used == x.size(), "bad number '" + x + "' in '" + s + "'");
        return v;
    };
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const auto colon = s.find(':', dots);
        const T a = num(s.substr(0, dots));
        const T b = num(s.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
        const T step = colon == std::string::npos ? default_step : num(s.substr(colon + 1));
        require(step > 0 && a <= b, "range '" + s + "' must be ascending with a positive step");
        if constexpr (std::is_floating_point_v<T>) {
            const auto count = static_cast<long long>(std::floor((b - a) / step + 1e-9));
            for (long long i = 0; i <= count; ++i) out.push_back(a + static_cast<T>(i) * step);
        } else {
            for (T v = a; v <= b; v += step) out.push_back(v);
        }
        return out;
    }
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(num(part));
    require(!out.empty(), "empty grid");
    return out;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

void print_score(const Score& s, const std::string& extra_key = "", double extra = 0.0) {
    nlohmann::json j{{"family", s.family}, {"score", s.value}};
    if (s.passed) j["passed"] = *s.passed;
    if (s.unclamped) j["unclamped"] = *s.unclamped;
    if (!extra_key.empty()) j[extra_key] = extra;
    std::cout << j.dump() << '\n';
}

int cmd_list() {
    std::cout << "families:\n";
    for (const auto& [f, name] : family_names()) std::cout << "  " << name << '\n';
    std::cout << "  copula (gen only)\n";
    std::cout << "permutation families: cx_ladder ccx_ladder mcx random_cx\n";
    std::cout << "bundled data (" << data_dir() << "):\n";
    namespace fs = std::filesystem;
    for (const char* sub : {"instances", "images"}) {
        const fs::path d = fs::path(data_dir()) / sub;
        if (!fs::exists(d)) continue;
        std::vector<std::string> names;
        for (const auto& e : fs::directory_iterator(d)) names.push_back(e.path().filename().string());
        std::sort(names.begin(), names.end());
        for (const auto& n : names) std::cout << "  " << sub << '/' << n << '\n';
    }
    std::cout << "fixed angles: 3-regular p<=" << max_fixed_angle_depth(3) << ", 4-regular p<=" << max_fixed_angle_depth(4)
              << '\n';
    return 0;
}

struct GenOpts {
    std::string family;
    int n = 8;
    int depth = 1;
    int degree = 3;
    std::uint64_t seed = 1;
    std::string perm = "cx_ladder";
    std::string image;
    std::uint64_t target = 0;
    long long s_or_k = -1;
    int vars = 2, bits = 3;
    int ansatz = 1;
    bool circuit = false;
    std::string out;
};

int cmd_gen(const GenOpts& o) {
    nlohmann::json j;
    const std::string f = o.family;
    if (!o.circuit && (f == "qaoa" || f == "lr-qaoa")) {
        auto g = f == "qaoa" ? gen_regular_graph(o.n, o.degree, o.seed) : gen_fcw_graph(o.n, o.seed);
        max_cut_exact(g);
        const std::string name = (f == "qaoa" ? std::to_string(o.degree) + "reg_" : std::string("fcw_")) +
                                 std::to_string(o.n) + "_s" + std::to_string(o.seed);
        j = maxcut_instance_doc(g, name);
    } else if (!o.circuit && f == "mps-load") {
        const auto img = o.image.empty() ? load_pgm(data_dir() + "/images/digit5_32.pgm") : load_pgm(o.image);
        j = image_instance_doc(img, std::filesystem::path(img.source).stem().string());
    } else if (!o.circuit && f == "chemistry") {
        j = read_json(o.image.empty() ? data_dir() + "/instances/h002_chain_1_25.json" : o.image);
    } else {
        Circuit c(1);
        std::optional<OutcomeDistribution> ref;
        if (f == "qaoa") {
            c = gen_qaoa_maxcut(gen_regular_graph(o.n, o.degree, o.seed), fixed_angles(o.degree, o.depth));
        } else if (f == "lr-qaoa") {
            c = gen_qaoa_maxcut(gen_fcw_graph(o.n, o.seed), lr_qaoa_schedule({1.25, 1.25, o.depth}));
        } else if (f == "cosine-qft") {
            auto ch = gen_cosine_qft(o.n, o.s_or_k >= 0 ? o.s_or_k : default_cosine_frequency(o.n));
            c = ch.circuit;
            ref = ch.reference;
        } else if (f == "hidden-phase-qft") {
            std::int64_t k = o.s_or_k;
            if (k < 0) {
                std::mt19937_64 rng(mix_seed(o.seed, 7));
                const std::uint64_t lo = std::uint64_t{1} << (o.n / 2), hi = std::uint64_t{1} << o.n;
                k = static_cast<std::int64_t>(lo + uniform_below(rng, hi - lo));
            }
            auto ch = gen_hidden_phase_qft(o.n, k);
            c = ch.circuit;
            ref = ch.reference;
        } else if (f == "hidden-shift") {
            const auto fam = permutation_family_from_name(o.perm);
            const auto s = draw_shift(o.n, o.seed);
            c = gen_hidden_shift(HiddenShiftSpec::make(o.n, s, gen_permutation(fam, o.n / 2, 50, o.seed)));
        } else if (f == "faa") {
            c = gen_faa(FaaSpec{o.n, o.target});
        } else if (f == "mps-load") {
            c = gen_mps_loading(o.image.empty() ? load_pgm(data_dir() + "/images/digit5_32.pgm") : load_pgm(o.image),
                                o.depth);
        } else if (f == "chemistry") {
            const auto inst = chem_instance_from_json(
                read_json(o.image.empty() ? data_dir() + "/instances/h002_chain_1_25.json" : o.image));
            const auto cs = gen_pucc_circuits(inst);
            j = nlohmann::json{{"z", cs.z}, {"x", cs.x}, {"y", cs.y}};
        } else if (f == "copula") {
            const auto v = o.ansatz == 2 ? CopulaAnsatz::ansatz2 : CopulaAnsatz::ansatz1;
            std::mt19937_64 rng(o.seed);
            std::vector<double> params(static_cast<std::size_t>(copula_param_count(v, o.vars, o.bits)));
            for (auto& x : params) x = 2.0 * std::numbers::pi * uniform01(rng);
            c = gen_copula_ansatz(v, o.vars, o.bits, params);
        } else {
            throw UnsupportedFamily("unknown family '" + f + "'");
        }
        if (j.is_null()) {
            j = nlohmann::json{{"circuit", c}, {"census", {{"n_1q", gate_census(c).n_1q}, {"n_2q", gate_census(c).n_2q}}}};
            if (ref) {
                nlohmann::json r = nlohmann::json::object();
                for (const auto& [k, p] : ref->entries()) r[to_bitstring(k, ref->num_bits())] = p;
                j["reference"] = r;
            }
        }
    }
    write_text(o.out, j.dump(2) + "\n");
    return 0;
}

struct RunOpts {
    std::string family;
    bool demo = false;
    std::string backend = "ideal";
    std::string shots = "1000";
    std::string seeds = "1";
    std::string depths = "1";
    std::string sizes = "8";
    std::string instance;
    int degree = 3;
    std::string perm = "cx_ladder";
    int cx_count = 50;
    std::string out, jsonl, markdown;
};

int cmd_run(const RunOpts& o) {
    std::vector<RunPlan> plans;
    if (o.demo) {
        plans = demo_plan(o.backend);
    } else {
        require(!o.family.empty(), "run needs --family or --demo");
        RunPlan p;
        p.family = family_from_name(o.family);
        p.backend = o.backend;
        p.shots.clear();
        for (auto v : parse_grid<long long>(o.shots, 1)) p.shots.push_back(static_cast<std::uint64_t>(v));
        p.seeds.clear();
        for (auto v : parse_grid<long long>(o.seeds, 1)) p.seeds.push_back(static_cast<std::uint64_t>(v));
        p.depths.clear();
        for (auto v : parse_grid<long long>(o.depths, 1)) p.depths.push_back(static_cast<int>(v));
        p.sizes.clear();
        const long long size_step = p.family == Family::hidden_shift ? 2 : 1;
        for (auto v : parse_grid<long long>(o.sizes, size_step)) p.sizes.push_back(static_cast<int>(v));
        if (!o.instance.empty()) p.instance_path = o.instance;
        p.degree = o.degree;
        p.permutation = permutation_family_from_name(o.perm);
        p.random_cx_count = o.cx_count;
        plans.push_back(p);
    }
    const auto rows = run_all(plans);
    int failed = 0;
    for (const auto& r : rows)
        if (!r.ok()) {
            ++failed;
            std::cerr << "row failed: " << r.domain << '/' << r.problem << '/' << r.algorithm << " n=" << r.n_qubits
                      << ": " << r.error.value_or("non-finite score") << '\n';
        }
    write_text(o.out, render_report(rows, ReportFormat::csv));
    if (!o.jsonl.empty()) emit_report(rows, ReportFormat::jsonl, o.jsonl);
    if (!o.markdown.empty()) emit_report(rows, ReportFormat::markdown, o.markdown);
    return failed == 0 ? 0 : 1;
}

struct ScoreOpts {
    std::string family;
    std::string hist, hist_x, hist_y;
    std::string instance;
    int n = 0;
    long long s_or_k = -1;
    std::uint64_t target = 0;
    std::string shift;
};

int cmd_score(const ScoreOpts& o) {
    const auto h = read_json(o.hist).get<ShotHistogram>();
    const std::string f = o.family;
    if (f == "qaoa" || f == "lr-qaoa") {
        require(!o.instance.empty(), "maxcut scoring needs --instance");
        auto g = std::get<MaxCutInstance>(decode_payload(load_instance(o.instance)));
        print_score(approximation_ratio(h, g), "best_shot_ratio", best_shot_ratio(h, g));
    } else if (f == "cosine-qft") {
        const int n = o.n > 0 ? o.n : h.num_bits();
        const auto ch = gen_cosine_qft(n, o.s_or_k >= 0 ? o.s_or_k : default_cosine_frequency(n));
        print_score({hellinger_fidelity(h, ch.reference), "cosine_qft", std::nullopt, std::nullopt});
    } else if (f == "hidden-phase-qft") {
        require(o.s_or_k >= 0, "hidden phase scoring needs --k");
        const int n = o.n > 0 ? o.n : h.num_bits() - 1;
        print_score({hellinger_fidelity(h, hidden_phase_reference(n, o.s_or_k)), "hidden_phase_qft", std::nullopt,
                     std::nullopt});
    } else if (f == "hidden-shift") {
        require(!o.shift.empty(), "hidden shift scoring needs --shift");
        print_score(hidden_shift_score(h, from_bitstring(o.shift)));
    } else if (f == "faa") {
        const int n = o.n > 0 ? o.n : h.num_bits();
        print_score(faa_score(h, o.target, faa_p_max(n)));
    } else if (f == "mps-load") {
        require(!o.instance.empty(), "image scoring needs --instance (document or .pgm)");
        const ImageSpec img = o.instance.size() > 4 && o.instance.substr(o.instance.size() - 4) == ".pgm"
                                  ? load_pgm(o.instance)
                                  : std::get<ImageSpec>(decode_payload(load_instance(o.instance)));
        print_score(mse_score(h, img));
    } else if (f == "chemistry") {
        require(!o.hist_x.empty() && !o.hist_y.empty(), "chemistry scoring needs --hist-x and --hist-y");
        const auto inst = std::get<ChemInstance>(decode_payload(
            load_instance(o.instance.empty() ? data_dir() + "/instances/h002_chain_1_25.json" : o.instance)));
        const auto e = chem_energy(inst, h, read_json(o.hist_x).get<ShotHistogram>(),
                                   read_json(o.hist_y).get<ShotHistogram>());
        print_score(e.score, "energy", e.energy);
    } else {
        throw UnsupportedFamily("unknown family '" + f + "'");
    }
    return 0;
}

int cmd_tts(const std::string& hist, std::optional<double> t_shot, double confidence, const std::string& thresholds) {
    auto h = read_json(hist).get<QualityHistogram>();
    if (t_shot) h.t_shot = *t_shot;
    const auto curve = tts_curve(h, parse_grid<double>(thresholds, 0.05), confidence);
    std::cout << "threshold,success_prob,tts_expectation_s,tts_confidence_s\n";
    for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
        const double q = success_prob(h, curve.thresholds[i]);
        std::printf("%.6g,%.10g,%.10g,%.10g\n", curve.thresholds[i], q, tts_expectation(q, h.t_shot),
                    curve.tts_seconds[i]);
    }
    return 0;
}

int cmd_report(const std::string& in, const std::string& format, const std::string& out) {
    const auto rows = load_jsonl(in);
    write_text(out, render_report(rows, report_format_from_name(format)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbench: application-level quantum benchmarks on a state-vector simulator"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list families and bundled instances");

    GenOpts g;
    auto* gen = app.add_subcommand("gen", "write an instance document, or a circuit with --circuit");
    gen->add_option("--family", g.family, "benchmark family")->required();
    gen->add_option("--n", g.n, "size: vertices, qubits or search qubits");
    gen->add_option("--depth", g.depth, "QAOA p or MPS depth D");
    gen->add_option("--degree", g.degree, "regular-graph degree");
    gen->add_option("--seed", g.seed, "seed");
    gen->add_option("--perm", g.perm, "hidden-shift permutation family");
    gen->add_option("--input", g.image, "image (.pgm) or chemistry document");
    gen->add_option("--target", g.target, "FAA target index");
    gen->add_option("--s,--k", g.s_or_k, "cosine frequency or hidden frequency");
    gen->add_option("--vars", g.vars, "copula variables");
    gen->add_option("--bits", g.bits, "copula bits per variable");
    gen->add_option("--ansatz", g.ansatz, "copula ansatz (1 or 2)");
    gen->add_flag("--circuit", g.circuit, "emit the circuit JSON instead of an instance document");
    gen->add_option("--out", g.out, "output path (default stdout)");

    RunOpts r;
    auto* runc = app.add_subcommand("run", "execute a run plan and emit a report");
    runc->add_option("--family", r.family, "benchmark family");
    runc->add_flag("--demo", r.demo, "run the built-in cross-family demo plan");
    runc->add_option("--backend", r.backend, "ideal | noisy:p1,p2 | random | external:cmd");
    runc->add_option("--shots", r.shots, "shots grid");
    runc->add_option("--seed", r.seeds, "seed grid");
    runc->add_option("--depths", r.depths, "depth grid, e.g. 1..5");
    runc->add_option("--sizes", r.sizes, "size grid, e.g. 4..8:2");
    runc->add_option("--instance", r.instance, "instance document (or .pgm for mps-load)");
    runc->add_option("--degree", r.degree, "regular-graph degree for qaoa");
    runc->add_option("--perm", r.perm, "hidden-shift permutation family");
    runc->add_option("--cx-count", r.cx_count, "CX count for random permutations");
    runc->add_option("--out", r.out, "CSV output (default stdout)");
    runc->add_option("--jsonl", r.jsonl, "jsonl output (keeps failed rows)");
    runc->add_option("--markdown", r.markdown, "markdown table output");

    ScoreOpts s;
    auto* score = app.add_subcommand("score", "score a histogram file");
    score->add_option("--family", s.family, "benchmark family")->required();
    score->add_option("--hist", s.hist, "histogram JSON (Z basis for chemistry)")->required();
    score->add_option("--hist-x", s.hist_x, "X-basis histogram (chemistry)");
    score->add_option("--hist-y", s.hist_y, "Y-basis histogram (chemistry)");
    score->add_option("--instance", s.instance, "instance document");
    score->add_option("--n", s.n, "qubit count where it cannot be read from the histogram");
    score->add_option("--s,--k", s.s_or_k, "cosine frequency or hidden frequency");
    score->add_option("--target", s.target, "FAA target index");
    score->add_option("--shift", s.shift, "hidden shift bitstring");

    std::string tts_hist, thresholds = "0.5..1.0";
    std::optional<double> t_shot;
    double confidence = 0.99;
    auto* tts = app.add_subcommand("tts", "time-to-solution curve from a quality histogram");
    tts->add_option("--hist", tts_hist, "quality histogram JSON")->required();
    tts->add_option("--t-shot", t_shot, "seconds per shot (overrides the file)");
    tts->add_option("--confidence", confidence, "confidence level");
    tts->add_option("--thresholds", thresholds, "threshold grid, e.g. 0.5..1.0:0.05");

    std::string rep_in, rep_format = "markdown", rep_out;
    auto* rep = app.add_subcommand("report", "re-emit a jsonl result file");
    rep->add_option("--in", rep_in, "results.jsonl")->required();
    rep->add_option("--format", rep_format, "csv | jsonl | markdown");
    rep->add_option("--out", rep_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand(gen)) return cmd_gen(g);
        if (app.got_subcommand(runc)) return cmd_run(r);
        if (app.got_subcommand(score)) return cmd_score(s);
        if (app.got_subcommand(tts)) return cmd_tts(tts_hist, t_shot, confidence, thresholds);
        if (app.got_subcommand(rep)) return cmd_report(rep_in, rep_format, rep_out);
    } catch (const qbench::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
