#include "bshep/bench/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bshep/errors.hpp"

namespace bshep::bench {

namespace {

constexpr const char* kModelFormat = "bshep-model";
constexpr int kModelVersion = 1;

const std::vector<std::string> kNodeColumns{"x", "y", "f", "fx", "fy", "fxx", "fxy", "fyy"};

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

double parse_double(const std::string& s, std::size_t line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ArgumentError("line " + std::to_string(line) + ": cannot parse number '" + s + "'");
    }
    return v;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream os(path);
    if (!os) throw ArgumentError("cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw ArgumentError("cannot open '" + path + "'");
    return is;
}

// Jet order 2 in file order: fx, fy, fxx, fxy, fyy.
constexpr std::array<std::pair<int, int>, 5> kJetColumns{{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

} // namespace

std::string format_double(double v)
{
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), ptr};
}

void write_nodes_csv(std::ostream& os, const NodeData& data)
{
    const std::size_t columns = data.jets ? 8 : data.values ? 3 : 2;
    for (std::size_t c = 0; c < columns; ++c) os << (c ? "," : "") << kNodeColumns[c];
    os << '\n';
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        os << format_double(data.points[i].x) << ',' << format_double(data.points[i].y);
        if (data.jets) {
            const Jet& j = (*data.jets)[i];
            os << ',' << format_double(j.value());
            for (const auto& [a, b] : kJetColumns) os << ',' << format_double(j(a, b));
        } else if (data.values) {
            os << ',' << format_double((*data.values)[i]);
        }
        os << '\n';
    }
}

NodeData read_nodes_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw ArgumentError("node file is empty");
    const auto header = split(line);
    if (header.size() != 2 && header.size() != 3 && header.size() != 8) {
        throw ArgumentError("node file header must be x,y[,f[,fx,fy,fxx,fxy,fyy]]");
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] != kNodeColumns[c]) {
            throw ArgumentError("node file column " + std::to_string(c + 1) + " must be '" + kNodeColumns[c] +
                                "', got '" + header[c] + "'");
        }
    }
    NodeData data;
    if (header.size() >= 3) data.values.emplace();
    if (header.size() == 8) data.jets.emplace();
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw ArgumentError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                                " columns, got " + std::to_string(cells.size()));
        }
        std::vector<double> v;
        for (const auto& c : cells) v.push_back(parse_double(c, lineno));
        const Point p{v[0], v[1]};
        data.points.push_back(p);
        if (data.values) data.values->push_back(v[2]);
        if (data.jets) {
            Jet j(p, 2);
            j.at(0, 0) = v[2];
            for (std::size_t k = 0; k < kJetColumns.size(); ++k) j.at(kJetColumns[k].first, kJetColumns[k].second) = v[3 + k];
            data.jets->push_back(std::move(j));
        }
    }
    return data;
}

void write_nodes_csv(const std::string& path, const NodeData& data)
{
    auto os = open_out(path);
    write_nodes_csv(os, data);
}

NodeData read_nodes_csv(const std::string& path)
{
    auto is = open_in(path);
    return read_nodes_csv(is);
}

void write_report_csv(std::ostream& os, const std::vector<ErrorReport>& rows)
{
    os << "operator,function,n,n_w,n_q,seed,max_abs,rms,runtime,status\n";
    for (const auto& r : rows) {
        std::string status = r.status;
        for (auto& ch : status) {
            if (ch == ',' || ch == '\n') ch = ';';
        }
        os << r.op << ',' << r.function << ',' << r.n << ',' << r.n_w << ',' << r.n_q << ',' << r.seed << ','
           << format_double(r.max_abs) << ',' << format_double(r.rms) << ',' << format_double(r.runtime) << ','
           << status << '\n';
    }
}

void write_report_csv(const std::string& path, const std::vector<ErrorReport>& rows)
{
    auto os = open_out(path);
    write_report_csv(os, rows);
}

void write_plot_csv(std::ostream& os, const std::vector<ErrorReport>& rows)
{
    os << "function,n,operator,max_abs\n";
    for (const auto& r : rows) {
        if (r.status != "ok") continue;
        os << r.function << ',' << r.n << ',' << r.op << ',' << format_double(r.max_abs) << '\n';
    }
}

void write_grid_csv(std::ostream& os, const GridValues& grid)
{
    os << "x,y,value\n";
    for (std::size_t iy = 0; iy < grid.spec.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.spec.nx; ++ix) {
            const Point p = grid.spec.at(ix, iy);
            os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(grid(ix, iy)) << '\n';
        }
    }
}

void save_model(const std::string& path, const Interpolant& itp)
{
    using nlohmann::json;
    const Config& c = itp.config();
    json j;
    j["format"] = kModelFormat;
    j["version"] = kModelVersion;
    j["config"] = {{"m", c.m},
                   {"mu", c.mu},
                   {"n_w", c.n_w},
                   {"n_q", c.n_q},
                   {"mode", to_string(c.mode)},
                   {"jet_source", to_string(c.jet_source)},
                   {"fallback", to_string(c.fallback)}};
    json nodes = json::array();
    for (const auto& p : itp.nodes().points()) nodes.push_back({p.x, p.y});
    j["nodes"] = std::move(nodes);
    if (c.jet_source == JetSource::analytic) {
        json partials = json::array();
        for (const auto& jet : itp.jets()) partials.push_back(std::vector<double>(jet.partials().begin(), jet.partials().end()));
        j["jets"] = {{"order", c.required_jet_order()}, {"partials", std::move(partials)}};
    } else {
        std::vector<double> values;
        for (const auto& jet : itp.jets()) values.push_back(jet.value());
        j["values"] = values;
    }
    j["radii"] = std::vector<double>(itp.support().radii().begin(), itp.support().radii().end());
    json assignments = json::array();
    for (const auto& a : itp.assignments()) assignments.push_back({a.node, a.others.first, a.others.second});
    j["assignments"] = std::move(assignments);

    auto os = open_out(path);
    os << j.dump(1) << '\n';
}

Interpolant load_model(const std::string& path)
{
    using nlohmann::json;
    auto is = open_in(path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ArgumentError("model file '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        if (j.at("format") != kModelFormat || j.at("version") != kModelVersion) {
            throw ArgumentError("'" + path + "' is not a version-1 bshep model");
        }
        const json& jc = j.at("config");
        Config c;
        c.m = jc.at("m").get<int>();
        c.mu = jc.at("mu").get<double>();
        c.n_w = jc.at("n_w").get<int>();
        c.n_q = jc.at("n_q").get<int>();
        c.mode = parse_mode(jc.at("mode").get<std::string>());
        c.jet_source = parse_jet_source(jc.at("jet_source").get<std::string>());
        c.fallback = parse_fallback(jc.at("fallback").get<std::string>());

        std::vector<Point> pts;
        for (const auto& p : j.at("nodes")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        NodeSet nodes(pts);

        Interpolant itp = [&] {
            if (c.jet_source == JetSource::analytic) {
                const int order = j.at("jets").at("order").get<int>();
                std::vector<Jet> jets;
                const auto& partials = j.at("jets").at("partials");
                if (partials.size() != pts.size()) throw ArgumentError("model has one jet per node");
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    jets.emplace_back(pts[i], order, partials[i].get<std::vector<double>>());
                }
                return Interpolant::build(std::move(nodes), std::move(jets), c);
            }
            const auto values = j.at("values").get<std::vector<double>>();
            return Interpolant::build(std::move(nodes), values, c);
        }();

        const auto radii = j.at("radii").get<std::vector<double>>();
        if (!std::equal(radii.begin(), radii.end(), itp.support().radii().begin(), itp.support().radii().end())) {
            throw NumericalError("model radii do not match the rebuilt interpolant");
        }
        const auto& assignments = j.at("assignments");
        if (assignments.size() != itp.assignments().size()) {
            throw NumericalError("model assignments do not match the rebuilt interpolant");
        }
        for (std::size_t i = 0; i < assignments.size(); ++i) {
            const auto& a = itp.assignments()[i];
            if (assignments[i] != json{a.node, a.others.first, a.others.second}) {
                throw NumericalError("model assignment of node " + std::to_string(i) + " does not match");
            }
        }
        return itp;
    } catch (const json::exception& e) {
        throw ArgumentError("malformed model file '" + path + "': " + e.what());
    }
}

} // namespace bshep::bench
