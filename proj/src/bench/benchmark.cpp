#include "bshep/bench/benchmark.hpp"

#include <chrono>

#include "bshep/bench/test_functions.hpp"
#include "bshep/errors.hpp"

namespace bshep::bench {

std::string to_string(OperatorId op)
{
    switch (op) {
    case OperatorId::sb3: return "sb3";
    case OperatorId::st2: return "st2";
    case OperatorId::bshep32: return "bshep32";
    case OperatorId::bshep33: return "bshep33";
    case OperatorId::qshep2d: return "qshep2d";
    }
    return "?";
}

OperatorId parse_operator(const std::string& s)
{
    if (s == "sb3") return OperatorId::sb3;
    if (s == "st2") return OperatorId::st2;
    if (s == "bshep32") return OperatorId::bshep32;
    if (s == "bshep33") return OperatorId::bshep33;
    if (s == "qshep2d") return OperatorId::qshep2d;
    throw ArgumentError("unknown operator '" + s + "' (sb3 | st2 | bshep32 | bshep33 | qshep2d)");
}

Config operator_config(OperatorId op, const BenchParams& params)
{
    Config c;
    c.mu = params.mu;
    c.n_w = params.n_w;
    c.fallback = Fallback::nearest;
    switch (op) {
    case OperatorId::sb3:
        c.m = 3;
        c.mode = Mode::bernoulli;
        c.jet_source = JetSource::analytic;
        break;
    case OperatorId::st2:
        c.m = 2;
        c.mode = Mode::taylor;
        c.jet_source = JetSource::analytic;
        break;
    case OperatorId::bshep32:
        c.m = 3;
        c.mode = Mode::bernoulli;
        c.jet_source = JetSource::wls_quadratic;
        c.n_q = params.n_q_quadratic;
        break;
    case OperatorId::bshep33:
        c.m = 3;
        c.mode = Mode::bernoulli;
        c.jet_source = JetSource::wls_cubic;
        c.n_q = params.n_q_cubic;
        break;
    case OperatorId::qshep2d:
        c.m = 2;
        c.mode = Mode::taylor;
        c.jet_source = JetSource::wls_quadratic;
        c.n_q = params.n_q_quadratic;
        break;
    }
    return c;
}

ErrorReport run_case(OperatorId op, int function, const NodeSet& nodes, std::uint64_t seed, const GridSpec& grid,
                     const BenchParams& params)
{
    const Config config = operator_config(op, params);
    ErrorReport row;
    row.op = to_string(op);
    row.function = function;
    row.n = nodes.size();
    row.n_w = config.n_w;
    row.n_q = config.jet_source == JetSource::analytic ? 0 : config.n_q;
    row.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    try {
        const TestFunction& f = test_function(function);
        Interpolant itp = [&] {
            if (config.jet_source == JetSource::analytic) {
                std::vector<Jet> jets;
                jets.reserve(nodes.size());
                for (const auto& p : nodes.points()) jets.push_back(f.jet(p, config.required_jet_order()));
                return Interpolant::build(nodes, std::move(jets), config);
            }
            std::vector<double> values;
            values.reserve(nodes.size());
            for (const auto& p : nodes.points()) values.push_back(f(p));
            return Interpolant::build(nodes, values, config);
        }();
        const auto err = max_error(itp, [&](Point p) { return f(p); }, grid);
        row.max_abs = err.max_abs;
        row.rms = err.rms;
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    row.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<ErrorReport> run_benchmark(const std::vector<OperatorId>& operators, const std::vector<int>& functions,
                                       const NodeSpec& spec, const GridSpec& grid, const BenchParams& params)
{
    grid.validate();
    for (int f : functions) test_function(f);
    std::vector<ErrorReport> rows;
    for (std::size_t n : spec.sizes) {
        const NodeSet nodes = generate_nodes(spec.kind, n, spec.seed);
        for (int f : functions) {
            for (OperatorId op : operators) rows.push_back(run_case(op, f, nodes, spec.seed, grid, params));
        }
    }
    return rows;
}

} // namespace bshep::bench
