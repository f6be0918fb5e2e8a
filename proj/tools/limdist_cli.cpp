// Batch front-end: compiles exact tables, evaluates limit laws / expansions,
// runs simulations and the validation suite, and emits the CSV/JSON artifacts.
//
// Conventions: long-form flags only, every flag overridable through an
// LIMDIST_* environment variable, deterministic output for deterministic
// commands, `# config <hash>` header comments on CSV artifacts, and a
// machine-readable error JSON on stderr with a nonzero exit on failure.

#include "limdist/cases.hpp"
#include "limdist/combinatorics.hpp"
#include "limdist/csvio.hpp"
#include "limdist/edge.hpp"
#include "limdist/expansion.hpp"
#include "limdist/hypothesis.hpp"
#include "limdist/sampler.hpp"
#include "limdist/tables.hpp"
#include "limdist/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace limdist;

// Every knob of every subcommand; round-trips losslessly through JSON
// (--config reads one back, --dump-config writes the effective one).
struct RunConfig {
    std::string command;
    std::string case_tag = "inv";
    int n_max = 100;
    int n = 1000;
    int l = 1;
    int m = 3;
    int beta = 1;
    double a = 1.0;
    double z = 1.0;
    int j = 2;
    long long max_den = 10000;
    double nu = 100.0;
    double r = 160.0;
    double param = 0.0;
    int figure = 1;
    std::string grid = "-8:0.1:5";
    std::string s_grid = "0.25:0.25:9";
    long long samples = 100000;
    std::uint64_t seed = 20260826;
    int threads = 0;  // 0 = logical cores
    int quad_nodes = 64;
    std::string method = "rsk";
    std::string suite = "all";
    std::string data_dir = "data";
    std::string output = "-";
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RunConfig, command, case_tag, n_max, n, l, m, beta, a, z, j,
                                   max_den, nu, r, param, figure, grid, s_grid, samples, seed,
                                   threads, quad_nodes, method, suite, data_dir, output)

struct Grid {
    double lo, step, hi;
};

Grid parse_grid(const std::string& s) {
    Grid g{};
    char extra;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.step, &g.hi, &extra) != 3 ||
        g.step <= 0 || g.hi < g.lo)
        throw std::runtime_error("grid must be 'lo:step:hi' with step > 0 and hi >= lo: " + s);
    return g;
}

// Output sink: '-' means stdout.
struct Sink {
    std::ofstream file;
    std::ostream& os;
    explicit Sink(const std::string& path)
        : file(path == "-" ? std::ofstream() : std::ofstream(path)), os(path == "-" ? std::cout : file) {
        if (path != "-" && !file) throw std::runtime_error("cannot open output file: " + path);
    }
};

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int run_tables(const RunConfig& cfg) {
    const ExactTable t = length_counts_table(case_from_name(cfg.case_tag), cfg.n_max);
    if (cfg.output == "-") {
        // Same byte stream save_table produces, minus the file sidecar.
        std::cout << "case,n,l,count\n";
        for (int n = 1; n <= t.n_max; ++n)
            for (int l = 1; l <= n; ++l)
                std::cout << cfg.case_tag << ',' << n << ',' << l << ',' << t.count(n, l).get_str()
                          << '\n';
    } else {
        save_table(t, cfg.output);
    }
    return 0;
}

int run_oracle(const RunConfig& cfg) {
    const Case c = case_from_name(cfg.case_tag);
    Int count;
    if (cfg.method == "rsk") {
        count = rsk_count(c, cfg.n, cfg.l);
    } else if (cfg.method == "goulden") {
        if (c != Case::Inv) throw std::runtime_error("goulden oracle applies to case inv only");
        count = goulden_count(cfg.n, cfg.l);
    } else if (cfg.method == "brute") {
        const bool fpf = c != Case::Inv;
        const int n_elems = fpf ? 2 * cfg.n : cfg.n;
        const Direction d = c == Case::DecrFpf ? Direction::Decreasing : Direction::Increasing;
        // decr-fpf tables are indexed by the half-length: L = 2l.
        const int target = c == Case::DecrFpf ? 2 * cfg.l : cfg.l;
        long long hits = 0;
        enumerate_involutions(n_elems, fpf, [&](const Permutation& p) {
            if (monotone_subseq_length(p, d) == target) ++hits;
        });
        count = static_cast<long>(hits);
    } else {
        throw std::runtime_error("unknown oracle method (rsk|goulden|brute): " + cfg.method);
    }
    json out = {{"case", cfg.case_tag}, {"n", cfg.n},          {"l", cfg.l},
                {"method", cfg.method}, {"count", count.get_str()}};
    Sink sink(cfg.output);
    sink.os << out.dump() << '\n';
    return 0;
}

int run_sample(const RunConfig& cfg) {
    const Histogram h = simulate_lengths(case_from_name(cfg.case_tag), cfg.n, cfg.samples,
                                         cfg.seed, effective_threads(cfg.threads));
    Sink sink(cfg.output);
    sink.os << "# config " << fnv1a_hex(json(cfg).dump()) << '\n' << h.to_csv();
    return 0;
}

int run_tw(const RunConfig& cfg) {
    const Grid g = parse_grid(cfg.grid);
    Sink sink(cfg.output);
    write_tw_grid(sink.os, cfg.beta, g.lo, g.step, g.hi, json(cfg).dump());
    return 0;
}

int run_hard_edge(const RunConfig& cfg) {
    const Grid g = parse_grid(cfg.s_grid);
    Sink sink(cfg.output);
    CsvWriter w(sink.os, {"beta", "a", "s", "E"}, json(cfg).dump());
    for (double s = g.lo; s <= g.hi + 1e-12 * (g.hi - g.lo); s += g.step)
        w.row({std::to_string(cfg.beta), csv_double(cfg.a), csv_double(s),
               csv_double(hard_edge_gap(cfg.beta, s, cfg.a, cfg.quad_nodes))});
    return 0;
}

int run_expand(const RunConfig& cfg) {
    const Case c = case_from_name(cfg.case_tag);
    std::unique_ptr<TableSummary> summary;
    try {
        summary = std::make_unique<TableSummary>(
            load_table_summary(cfg.data_dir + "/" + cfg.case_tag + ".summary"));
        if (!summary->rows.count(cfg.n)) summary.reset();
    } catch (const std::exception&) {
        summary.reset();  // no exact column without a summary spot row
    }
    const double gn = case_gamma(c) * cfg.n;
    Sink sink(cfg.output);
    CsvWriter w(sink.os, {"case", "n", "l", "t", "expansion", "exact"}, json(cfg).dump());
    Int cum = 0, total = summary ? summary->case_total(cfg.n) : Int(1);
    for (int l = 1; l <= cfg.n; ++l) {
        const double t = scaled_variable(case_l_star(c, l), gn);
        if (summary) cum += summary->rows.at(cfg.n)[l - 1];
        if (t < -6.5 || t > 2.5) continue;  // overlay window of the figure exports
        w.row({cfg.case_tag, std::to_string(cfg.n), std::to_string(l), csv_double(t),
               csv_double(cdf_expansion(c, cfg.n, l, cfg.m)),
               summary ? csv_double(Rat(cum, total).get_d()) : std::string()});
    }
    return 0;
}

int run_moments(const RunConfig& cfg) {
    Sink sink(cfg.output);
    CsvWriter w(sink.os, {"beta", "j", "M"}, json(cfg).dump());
    for (int j = 1; j <= 5; ++j)
        w.row({std::to_string(cfg.beta), std::to_string(j), csv_double(tw_moment(cfg.beta, j))});
    return 0;
}

int run_hypothesis(const RunConfig& cfg) {
    HypothesisLab lab;
    const ReconstructionReport rep = lab.reconstruct(cfg.z, cfg.j, cfg.max_den);
    Sink sink(cfg.output);
    sink.os << rep.to_json() << '\n';
    return rep.pass ? 0 : 1;
}

int run_validate(const RunConfig& cfg) {
    const std::vector<CheckResult> results =
        run_validation_suite(cfg.suite, cfg.data_dir, effective_threads(cfg.threads));
    int fails = 0;
    for (const CheckResult& r : results) {
        std::printf("check %2d %-36s %s  (%.1fs)  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        if (!r.pass) ++fails;
    }
    std::printf("%zu checks, %d failed\n", results.size(), fails);
    return fails ? 1 : 0;
}

int run_export_figure(const RunConfig& cfg) {
    // Default parameters mirror the smallest published setting per figure.
    double param = cfg.param;
    if (param == 0.0) param = cfg.figure == 1 ? 100 : cfg.figure == 2 ? 160
                              : cfg.figure == 3 ? 250 : 1000;
    Sink sink(cfg.output);
    export_figure_data(cfg.figure, param, sink.os, cfg.data_dir, json(cfg).dump());
    return 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--output", cfg.output, "Output file, '-' for stdout")
        ->envname("LIMDIST_OUTPUT");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = logical cores)")
        ->envname("LIMDIST_THREADS");
}

void add_case(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--case", cfg.case_tag, "Ensemble: incr-fpf | decr-fpf | inv")
        ->envname("LIMDIST_CASE")
        ->check(CLI::IsMember({"incr-fpf", "decr-fpf", "inv"}));
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Longest monotone subsequences of random involutions: exact tables, "
                 "limit laws, asymptotic expansions, and the validation suite"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config produced by --dump-config")
        ->envname("LIMDIST_CONFIG");
    bool dump_config = false;
    app.add_flag("--dump-config", dump_config, "Print the effective config JSON and exit");

    // Load --config before binding defaults so explicit flags still win.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (config_path.empty())
        if (const char* env = std::getenv("LIMDIST_CONFIG")) config_path = env;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << json{{"error", {{"code", "config"},
                                         {"message", "cannot read config file: " + config_path}}}}
                             .dump()
                      << '\n';
            return 2;
        }
        json::parse(in).get_to(cfg);
    }

    CLI::App* tables = app.add_subcommand("tables", "Exact length-count tables as CSV");
    add_case(tables, cfg);
    add_common(tables, cfg);
    tables->add_option("--n-max", cfg.n_max, "Largest ensemble size")->envname("LIMDIST_N_MAX");

    CLI::App* oracle = app.add_subcommand("oracle", "Independent count of one table entry");
    add_case(oracle, cfg);
    add_common(oracle, cfg);
    oracle->add_option("--n", cfg.n, "Ensemble size")->envname("LIMDIST_N");
    oracle->add_option("--l", cfg.l, "Length (half-length for decr-fpf)")->envname("LIMDIST_L");
    oracle->add_option("--method", cfg.method, "rsk | goulden | brute")
        ->envname("LIMDIST_METHOD");

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo length histogram");
    add_case(sample, cfg);
    add_common(sample, cfg);
    sample->add_option("--n", cfg.n, "Ensemble size")->envname("LIMDIST_N");
    sample->add_option("--samples", cfg.samples, "Sample count")->envname("LIMDIST_SAMPLES");
    sample->add_option("--seed", cfg.seed, "RNG seed")->envname("LIMDIST_SEED");

    CLI::App* tw = app.add_subcommand("tw", "Soft-edge limit law with derivative columns");
    add_common(tw, cfg);
    tw->add_option("--beta", cfg.beta, "1 | 2 | 4")->envname("LIMDIST_BETA");
    tw->add_option("--grid", cfg.grid, "t grid lo:step:hi")->envname("LIMDIST_GRID");

    CLI::App* hard = app.add_subcommand("hard-edge", "Hard-edge gap probabilities on a grid");
    add_common(hard, cfg);
    hard->add_option("--beta", cfg.beta, "1 | 4")->envname("LIMDIST_BETA");
    hard->add_option("--a", cfg.a, "Parameter a of E_beta(s; a)")->envname("LIMDIST_A");
    hard->add_option("--s-grid", cfg.s_grid, "s grid lo:step:hi")->envname("LIMDIST_S_GRID");
    hard->add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes")
        ->envname("LIMDIST_QUAD_NODES");

    CLI::App* expand = app.add_subcommand("expand", "Finite-n CDF expansion over l");
    add_case(expand, cfg);
    add_common(expand, cfg);
    expand->add_option("--n", cfg.n, "Ensemble size")->envname("LIMDIST_N");
    expand->add_option("--m", cfg.m, "Truncation order")->envname("LIMDIST_M");
    expand->add_option("--data-dir", cfg.data_dir, "Summary artifact directory")
        ->envname("LIMDIST_DATA_DIR");

    CLI::App* moments = app.add_subcommand("moments", "Limit-law moments M_1..M_5");
    add_common(moments, cfg);
    moments->add_option("--beta", cfg.beta, "1 | 4")->envname("LIMDIST_BETA");

    CLI::App* hypo = app.add_subcommand("hypothesis", "Coefficient reconstruction report");
    add_common(hypo, cfg);
    hypo->add_option("--z", cfg.z, "Determinant parameter z")->envname("LIMDIST_Z");
    hypo->add_option("--j", cfg.j, "Expansion order j (1..3)")->envname("LIMDIST_J");
    hypo->add_option("--max-den", cfg.max_den, "Largest snap denominator")
        ->envname("LIMDIST_MAX_DEN");

    CLI::App* validate = app.add_subcommand("validate", "Run the validation suite");
    add_common(validate, cfg);
    validate->add_option("--suite", cfg.suite,
                         "all | identities | edge | expansion | bridge | hypothesis | simulation")
        ->envname("LIMDIST_SUITE");
    validate->add_option("--data-dir", cfg.data_dir, "Summary artifact directory")
        ->envname("LIMDIST_DATA_DIR");

    CLI::App* fig = app.add_subcommand("export-figure", "Overlay dataset for a diagnostic plot");
    add_common(fig, cfg);
    fig->add_option("--figure", cfg.figure, "1..5")->envname("LIMDIST_FIGURE")
        ->check(CLI::Range(1, 5));
    fig->add_option("--param", cfg.param, "nu (fig 1), r (fig 2), n (figs 3-5); 0 = default")
        ->envname("LIMDIST_PARAM");
    fig->add_option("--data-dir", cfg.data_dir, "Summary artifact directory")
        ->envname("LIMDIST_DATA_DIR");

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        if (dump_config) {
            std::cout << json(cfg).dump(2) << '\n';
            return 0;
        }
        if (cfg.command == "tables") return run_tables(cfg);
        if (cfg.command == "oracle") return run_oracle(cfg);
        if (cfg.command == "sample") return run_sample(cfg);
        if (cfg.command == "tw") return run_tw(cfg);
        if (cfg.command == "hard-edge") return run_hard_edge(cfg);
        if (cfg.command == "expand") return run_expand(cfg);
        if (cfg.command == "moments") return run_moments(cfg);
        if (cfg.command == "hypothesis") return run_hypothesis(cfg);
        if (cfg.command == "validate") return run_validate(cfg);
        if (cfg.command == "export-figure") return run_export_figure(cfg);
        throw std::runtime_error("unhandled subcommand: " + cfg.command);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        return e.get_exit_code() ? e.get_exit_code() : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "runtime"}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    }
}
