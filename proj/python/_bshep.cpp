#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bshep/bench/benchmark.hpp"
#include "bshep/bench/io.hpp"
#include "bshep/bench/nodes.hpp"
#include "bshep/bench/test_functions.hpp"
#include "bshep/errors.hpp"
#include "bshep/interp.hpp"

namespace py = pybind11;
using namespace bshep;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<Point> to_points(const Array& a)
{
    if (a.ndim() != 2 || a.shape(1) != 2) throw ArgumentError("points must have shape (n, 2)");
    const auto r = a.unchecked<2>();
    std::vector<Point> out(static_cast<std::size_t>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.shape(0); ++i) out[static_cast<std::size_t>(i)] = {r(i, 0), r(i, 1)};
    return out;
}

Array from_points(std::span<const Point> pts)
{
    Array out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{2}});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        w(static_cast<py::ssize_t>(i), 0) = pts[i].x;
        w(static_cast<py::ssize_t>(i), 1) = pts[i].y;
    }
    return out;
}

Config make_config(int m, const std::string& mode, const std::string& jet_source, int n_w, int n_q, double mu,
                   const std::string& fallback)
{
    Config c;
    c.m = m;
    c.mode = parse_mode(mode);
    c.jet_source = parse_jet_source(jet_source);
    c.n_w = n_w;
    c.n_q = n_q;
    c.mu = mu;
    c.fallback = parse_fallback(fallback);
    return c;
}

Interpolant build(const Array& points, const Array& data, int m, const std::string& mode,
                  const std::string& jet_source, int n_w, int n_q, double mu, const std::string& fallback)
{
    const Config c = make_config(m, mode, jet_source, n_w, n_q, mu, fallback);
    std::vector<Point> pts = to_points(points);
    NodeSet nodes(pts);
    if (data.ndim() == 1) {
        if (static_cast<std::size_t>(data.shape(0)) != pts.size()) throw ArgumentError("one value per node required");
        return Interpolant::build(std::move(nodes), std::span<const double>(data.data(), pts.size()), c);
    }
    // rows of partials in jet order: f, fx, fy, fxx, fxy, fyy, ...
    if (data.ndim() != 2 || static_cast<std::size_t>(data.shape(0)) != pts.size()) {
        throw ArgumentError("data must be values (n,) or jets (n, k)");
    }
    int order = 0;
    while (Jet::size_for(order) < static_cast<std::size_t>(data.shape(1))) ++order;
    if (Jet::size_for(order) != static_cast<std::size_t>(data.shape(1))) {
        throw ArgumentError("jet rows must hold (order+1)(order+2)/2 partials");
    }
    std::vector<Jet> jets;
    const std::size_t k = Jet::size_for(order);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        jets.emplace_back(pts[i], order, std::vector<double>(data.data() + i * k, data.data() + (i + 1) * k));
    }
    return Interpolant::build(std::move(nodes), std::move(jets), c);
}

py::object evaluate(const Interpolant& itp, const Array& x, const Array& y, const std::optional<std::string>& fb)
{
    if (x.size() != y.size()) throw ArgumentError("x and y must have the same size");
    const Fallback f = fb ? parse_fallback(*fb) : itp.config().fallback;
    Array out(std::vector<py::ssize_t>(x.shape(), x.shape() + x.ndim()));
    const double* px = x.data();
    const double* py_ = y.data();
    double* po = out.mutable_data();
    {
        py::gil_scoped_release release;
        for (py::ssize_t i = 0; i < x.size(); ++i) po[i] = itp.eval({px[i], py_[i]}, f);
    }
    if (x.ndim() == 0) return py::float_(po[0]);
    return std::move(out);
}

} // namespace

PYBIND11_MODULE(_bshep, m)
{
    m.doc() = "Shepard-Bernoulli scattered data interpolation";

    static py::exception<ArgumentError> argument_error(m, "ArgumentError", PyExc_ValueError);
    static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ArgumentError& e) {
            argument_error(e.what());
        } catch (const NumericalError& e) {
            numerical_error(e.what());
        }
    });

    m.def(
        "generate_nodes",
        [](const std::string& kind, std::size_t n, std::uint64_t seed) {
            return from_points(bench::generate_nodes(bench::parse_node_kind(kind), n, seed).points());
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 1);

    m.def(
        "test_function",
        [](int id, const Array& x, const Array& y, int dx, int dy) {
            const auto& f = bench::test_function(id);
            if (x.size() != y.size()) throw ArgumentError("x and y must have the same size");
            Array out(std::vector<py::ssize_t>(x.shape(), x.shape() + x.ndim()));
            for (py::ssize_t i = 0; i < x.size(); ++i) out.mutable_data()[i] = f.partial({x.data()[i], y.data()[i]}, dx, dy);
            return out;
        },
        py::arg("id"), py::arg("x"), py::arg("y"), py::arg("dx") = 0, py::arg("dy") = 0,
        "Test function `id` (1..10) or one of its partial derivatives.");

    py::class_<Interpolant>(m, "Interpolant")
        .def(py::init(&build), py::arg("points"), py::arg("data"), py::arg("m") = 3, py::arg("mode") = "bernoulli",
             py::arg("jet_source") = "analytic", py::arg("n_w") = 9, py::arg("n_q") = 13, py::arg("mu") = 2.0,
             py::arg("fallback") = "error",
             "Build from node values (n,) or nodal partials (n, k) in the order f, fx, fy, fxx, fxy, fyy, ...")
        .def("__call__", &evaluate, py::arg("x"), py::arg("y"), py::arg("fallback") = py::none())
        .def(
            "grid",
            [](const Interpolant& itp, std::size_t nx, std::size_t ny, std::array<double, 4> range) {
                GridSpec g{range[0], range[1], range[2], range[3], nx, ny};
                GridValues v;
                {
                    py::gil_scoped_release release;
                    v = eval_grid(itp, g);
                }
                Array out({static_cast<py::ssize_t>(ny), static_cast<py::ssize_t>(nx)});
                std::copy(v.values.begin(), v.values.end(), out.mutable_data());
                return out;
            },
            py::arg("nx") = 100, py::arg("ny") = 100, py::arg("range") = std::array<double, 4>{0, 1, 0, 1},
            "Values on an ny x nx grid (rows follow y).")
        .def_property_readonly("nodes", [](const Interpolant& itp) { return from_points(itp.nodes().points()); })
        .def_property_readonly("radii", [](const Interpolant& itp) {
            const auto r = itp.support().radii();
            return Array(static_cast<py::ssize_t>(r.size()), r.data());
        })
        .def_property_readonly("triangles", [](const Interpolant& itp) {
            std::vector<std::array<std::size_t, 3>> out;
            for (const auto& a : itp.assignments()) out.push_back({a.node, a.others.first, a.others.second});
            return out;
        })
        .def("save", [](const Interpolant& itp, const std::string& path) { bench::save_model(path, itp); })
        .def_static("load", &bench::load_model);

    m.def(
        "run_benchmark",
        [](const std::vector<std::string>& operators, const std::vector<int>& functions, const std::vector<std::size_t>& sizes,
           const std::string& kind, std::uint64_t seed, std::size_t grid, int n_w, int n_q_quadratic, int n_q_cubic) {
            std::vector<bench::OperatorId> ops;
            for (const auto& o : operators) ops.push_back(bench::parse_operator(o));
            bench::NodeSpec spec{bench::parse_node_kind(kind), sizes, seed};
            bench::BenchParams params;
            params.n_w = n_w;
            params.n_q_quadratic = n_q_quadratic;
            params.n_q_cubic = n_q_cubic;
            std::vector<bench::ErrorReport> rows;
            {
                py::gil_scoped_release release;
                rows = bench::run_benchmark(ops, functions, spec, GridSpec{0, 1, 0, 1, grid, grid}, params);
            }
            py::list out;
            for (const auto& r : rows) {
                out.append(py::dict(py::arg("operator") = r.op, py::arg("function") = r.function, py::arg("n") = r.n,
                                    py::arg("n_w") = r.n_w, py::arg("n_q") = r.n_q, py::arg("seed") = r.seed,
                                    py::arg("max_abs") = r.max_abs, py::arg("rms") = r.rms,
                                    py::arg("runtime") = r.runtime, py::arg("status") = r.status));
            }
            return out;
        },
        py::arg("operators"), py::arg("functions"), py::arg("sizes"), py::arg("kind") = "uniform-random",
        py::arg("seed") = 1, py::arg("grid") = 100, py::arg("n_w") = 9, py::arg("n_q_quadratic") = 13,
        py::arg("n_q_cubic") = 17);
}
