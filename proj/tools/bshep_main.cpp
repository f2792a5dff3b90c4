// bshep: node generation, fitting, grid evaluation and benchmarks for
// Shepard-Bernoulli interpolation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bshep/bench/benchmark.hpp"
#include "bshep/bench/io.hpp"
#include "bshep/bench/nodes.hpp"
#include "bshep/bench/test_functions.hpp"
#include "bshep/errors.hpp"

namespace {

using namespace bshep;
using namespace bshep::bench;

constexpr int kExitArgument = 2;
constexpr int kExitNumerical = 3;

/// "1..4,7" -> {1, 2, 3, 4, 7}
std::vector<long long> parse_int_list(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ArgumentError("cannot parse integer list '" + text + "'");
        }
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const long long lo = to_int(item.substr(0, dots));
        const long long hi = to_int(item.substr(dots + 2));
        if (hi < lo) throw ArgumentError("empty range '" + item + "'");
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw ArgumentError("empty integer list");
    return out;
}

std::vector<std::string> parse_word_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

GridSpec parse_grid(const std::string& counts, const std::string& range)
{
    GridSpec g;
    const auto n = parse_int_list(counts);
    if (n.size() != 2 || n[0] < 2 || n[1] < 2) throw ArgumentError("--grid expects nx,ny with both >= 2");
    g.nx = static_cast<std::size_t>(n[0]);
    g.ny = static_cast<std::size_t>(n[1]);
    if (!range.empty()) {
        std::vector<double> r;
        for (const auto& w : parse_word_list(range)) {
            try {
                r.push_back(std::stod(w));
            } catch (const std::exception&) {
                throw ArgumentError("cannot parse --range '" + range + "'");
            }
        }
        if (r.size() != 4) throw ArgumentError("--range expects x0,x1,y0,y1");
        g.x0 = r[0];
        g.x1 = r[1];
        g.y0 = r[2];
        g.y1 = r[3];
    }
    g.validate();
    return g;
}

struct GenArgs {
    std::string kind = "uniform-random";
    std::size_t n = 202;
    std::uint64_t seed = 1;
    std::string out;
    int function = 0;
    bool values_only = false;
};

void run_gen_nodes(const GenArgs& a)
{
    const NodeSet nodes = generate_nodes(parse_node_kind(a.kind), a.n, a.seed);
    NodeData data;
    data.points.assign(nodes.points().begin(), nodes.points().end());
    if (a.function != 0) {
        const TestFunction& f = test_function(a.function);
        if (a.values_only) {
            data.values.emplace();
            for (const auto& p : data.points) data.values->push_back(f(p));
        } else {
            data.jets.emplace();
            for (const auto& p : data.points) data.jets->push_back(f.jet(p, 2));
        }
    }
    write_nodes_csv(a.out, data);
}

struct FitArgs {
    std::string nodes;
    std::string out_model;
    int m = 3;
    std::string mode = "bernoulli";
    std::string jet_source = "analytic";
    int n_w = 9;
    int n_q = 13;
    double mu = 2.0;
    std::string fallback = "error";
};

void run_fit(const FitArgs& a)
{
    Config c;
    c.m = a.m;
    c.mode = parse_mode(a.mode);
    c.jet_source = parse_jet_source(a.jet_source);
    c.n_w = a.n_w;
    c.n_q = a.n_q;
    c.mu = a.mu;
    c.fallback = parse_fallback(a.fallback);
    c.validate();

    NodeData data = read_nodes_csv(a.nodes);
    NodeSet nodes(data.points);
    auto itp = [&] {
        if (c.jet_source == JetSource::analytic && c.required_jet_order() > 0) {
            if (!data.jets) throw ArgumentError("analytic jets need the fx,fy,fxx,fxy,fyy columns");
            return Interpolant::build(std::move(nodes), std::move(*data.jets), c);
        }
        if (!data.values) {
            if (!data.jets) throw ArgumentError("node file has no function values");
            data.values.emplace();
            for (const auto& j : *data.jets) data.values->push_back(j.value());
        }
        return Interpolant::build(std::move(nodes), *data.values, c);
    }();
    save_model(a.out_model, itp);
    std::cerr << "fitted " << itp.nodes().size() << " nodes (" << to_string(c.mode) << ", m = " << c.m << ", "
              << to_string(c.jet_source) << ")\n";
}

struct EvalArgs {
    std::string model;
    std::string grid = "100,100";
    std::string range;
    std::string out;
    std::string fallback;
};

void run_eval(const EvalArgs& a)
{
    const Interpolant itp = load_model(a.model);
    const GridSpec g = parse_grid(a.grid, a.range);
    const Fallback fb = a.fallback.empty() ? itp.config().fallback : parse_fallback(a.fallback);
    GridValues values{g, std::vector<double>(g.nx * g.ny)};
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        for (std::size_t ix = 0; ix < g.nx; ++ix) values.values[iy * g.nx + ix] = itp.eval(g.at(ix, iy), fb);
    }
    std::ofstream os(a.out);
    if (!os) throw ArgumentError("cannot open '" + a.out + "' for writing");
    write_grid_csv(os, values);
}

struct BenchArgs {
    std::string functions = "1..4";
    std::string operators = "sb3,st2,bshep32,bshep33,qshep2d";
    std::string sizes = "202,777,2991";
    std::string kind = "uniform-random";
    int n_w = 9;
    std::string n_q = "13,17";
    double mu = 2.0;
    std::uint64_t seed = 1;
    std::string grid = "100,100";
    std::string out = "report.csv";
    std::string plot_out;
};

void run_bench(const BenchArgs& a)
{
    std::vector<OperatorId> ops;
    for (const auto& w : parse_word_list(a.operators)) ops.push_back(parse_operator(w));
    if (ops.empty()) throw ArgumentError("no operators given");
    std::vector<int> functions;
    for (long long f : parse_int_list(a.functions)) functions.push_back(static_cast<int>(f));

    NodeSpec spec;
    spec.kind = parse_node_kind(a.kind);
    spec.seed = a.seed;
    spec.sizes.clear();
    for (long long n : parse_int_list(a.sizes)) {
        if (n < 3) throw ArgumentError("node counts must be >= 3");
        spec.sizes.push_back(static_cast<std::size_t>(n));
    }
    BenchParams params;
    params.n_w = a.n_w;
    params.mu = a.mu;
    const auto nq = parse_int_list(a.n_q);
    if (nq.size() > 2) throw ArgumentError("--n-q expects quadratic[,cubic]");
    params.n_q_quadratic = static_cast<int>(nq[0]);
    params.n_q_cubic = static_cast<int>(nq.size() == 2 ? nq[1] : nq[0]);

    const auto rows = run_benchmark(ops, functions, spec, parse_grid(a.grid, ""), params);
    write_report_csv(a.out, rows);
    if (!a.plot_out.empty()) {
        std::ofstream os(a.plot_out);
        if (!os) throw ArgumentError("cannot open '" + a.plot_out + "' for writing");
        write_plot_csv(os, rows);
    }
    int failed = 0;
    for (const auto& r : rows) {
        std::cout << r.op << " f" << r.function << " N=" << r.n << " max=" << format_double(r.max_abs)
                  << " rms=" << format_double(r.rms) << (r.status == "ok" ? "" : "  [" + r.status + "]") << '\n';
        failed += r.status != "ok";
    }
    if (failed) throw NumericalError(std::to_string(failed) + " benchmark row(s) failed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shepard-Bernoulli scattered data interpolation"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-nodes", "Generate a seeded node set as CSV");
    gen_cmd->add_option("--kind", gen.kind, "uniform-random | grid | clustered")->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Number of nodes")->required();
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output CSV")->required();
    gen_cmd->add_option("--function", gen.function, "Sample test function 1..10 (value and partials)");
    gen_cmd->add_flag("--values-only", gen.values_only, "With --function, write only the f column");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Build an interpolant from a node file");
    fit_cmd->add_option("--nodes", fit.nodes, "Node CSV")->required();
    fit_cmd->add_option("--m", fit.m, "Operator degree")->capture_default_str();
    fit_cmd->add_option("--mode", fit.mode, "bernoulli | taylor")->capture_default_str();
    fit_cmd->add_option("--jet-source", fit.jet_source, "analytic | wls-quadratic | wls-cubic")->capture_default_str();
    fit_cmd->add_option("--n-w", fit.n_w, "Neighbors per Shepard support disk")->capture_default_str();
    fit_cmd->add_option("--n-q", fit.n_q, "Neighbors per least-squares disk")->capture_default_str();
    fit_cmd->add_option("--mu", fit.mu, "Shepard exponent")->capture_default_str();
    fit_cmd->add_option("--fallback", fit.fallback, "Uncovered points: error | nearest")->capture_default_str();
    fit_cmd->add_option("--out-model", fit.out_model, "Model file (JSON)")->required();

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a rectangular grid");
    eval_cmd->add_option("--model", ev.model, "Model file")->required();
    eval_cmd->add_option("--grid", ev.grid, "nx,ny")->capture_default_str();
    eval_cmd->add_option("--range", ev.range, "x0,x1,y0,y1 (default: unit square)");
    eval_cmd->add_option("--fallback", ev.fallback, "Override the model's policy: error | nearest");
    eval_cmd->add_option("--out", ev.out, "Output CSV")->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Compare operators on the test functions");
    bench_cmd->add_option("--functions", bench.functions, "Function ids, e.g. 1..10 or 1,3")->capture_default_str();
    bench_cmd->add_option("--operators", bench.operators, "sb3,st2,bshep32,bshep33,qshep2d")->capture_default_str();
    bench_cmd->add_option("--n", bench.sizes, "Node counts")->capture_default_str();
    bench_cmd->add_option("--kind", bench.kind, "Node distribution")->capture_default_str();
    bench_cmd->add_option("--n-w", bench.n_w, "Neighbors per Shepard support disk")->capture_default_str();
    bench_cmd->add_option("--n-q", bench.n_q, "Least-squares neighbors: quadratic,cubic")->capture_default_str();
    bench_cmd->add_option("--mu", bench.mu, "Shepard exponent")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Node seed")->capture_default_str();
    bench_cmd->add_option("--grid", bench.grid, "Error grid nx,ny over the unit square")->capture_default_str();
    bench_cmd->add_option("--out", bench.out, "Report CSV")->capture_default_str();
    bench_cmd->add_option("--plot-out", bench.plot_out, "Plot data CSV (function,n,operator,max_abs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }

    try {
        if (*gen_cmd) run_gen_nodes(gen);
        if (*fit_cmd) run_fit(fit);
        if (*eval_cmd) run_eval(ev);
        if (*bench_cmd) run_bench(bench);
    } catch (const ArgumentError& e) {
        std::cerr << "bshep: " << e.what() << '\n';
        return kExitArgument;
    } catch (const std::exception& e) {
        std::cerr << "bshep: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
