#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "bshep/bench/benchmark.hpp"
#include "bshep/bench/io.hpp"
#include "bshep/bench/nodes.hpp"
#include "bshep/bench/test_functions.hpp"
#include "bshep/errors.hpp"
#include "../support/util.hpp"

using namespace bshep;
using namespace bshep::bench;

namespace {

// symbolic partials at (0.3, 0.7) in jet order, through total degree 3
const std::array<std::array<double, 10>, 10> kReference{{
    {0.2575674263552809, -0.91483595511316651, -0.66184528519572439, -9.2071578812716748, -6.0267731051446409,
     2.5303875510739933, -25.69656518640188, -107.216296597877, -4.3214894166668616, 60.629468986594588},
    {0.22205643803692518, -0.0029818890992631252, 0.0029818890992631252, -0.053593919077831523,
     0.053593919077831523, -0.053593919077831523, -0.96181072013750479, 0.96181072013750479, -0.96181072013750479,
     0.96181072013750479},
    {0.073754807645258949, 0.043814737215005319, 0.53101534794751248, -1.2623850029273809, 0.31545466214703716,
     3.8641612942127641, -4.5923651632471021, -9.0888422460185954, 2.2955413628986716, -15.484407546149464},
    {0.22232560361949147, 0.45020934732947021, -0.45020934732947021, -1.3393728083051739, -0.9116739283421772,
     -1.3393728083051739, -11.828969220239749, 2.7122299368179772, -2.7122299368179772, 11.828969220239749},
    {0.065966233027871565, 0.53432648752575962, -0.53432648752575962, 1.6564121113298549, -4.328044548958653,
     1.6564121113298549, -29.863507387814707, -13.416938101771825, 13.416938101771825, 29.863507387814707},
    {0.34268823226037959, 0.23733569823745043, -0.23733569823745043, -1.2535219945156022, 0.066843503328350096,
     -1.2535219945156022, 1.0591301970350882, -0.39069516375158725, 0.39069516375158725, -1.0591301970350882},
    {-0.43761423954842427, -5.3882018143274077, -16.441689813200217, 87.785101653934987, -44.453996187480769,
     122.31347631988994, 358.59012209059165, 1446.0782159854011, 165.44065080369913, 1506.3459947642605},
    {0.25057347483062287, 2.9814402480632665, -2.3047638318802033, 44.721603720948998, -5.4946916666202537,
     34.571457478203044, 298.14402480632663, -82.420374999303817, 82.420374999303817, -230.47638318802032},
    {-47.955228494721261, -235.1727417842819, 162.03976903595907, 1512.1481634709187, 794.64404525719226,
     2380.3793852770682, 52617.614230353553, -5109.5187500555685, 11673.395458516323, -46762.207437723839},
    {-0.34008788111761201, -2.1032876719920561, 2.6619734598649463, 20.084291151424015, -12.10931368919629,
     28.635717437213785, 123.4345018859315, -277.31492834134497, 367.05938842547852, -311.30103709710573},
}};

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("bshep_test_" + name)).string();
}

} // namespace

TEST_CASE("test functions against symbolic partials")
{
    for (int id = 1; id <= kTestFunctionCount; ++id) {
        const Jet j = test_function(id).jet({0.3, 0.7}, 3);
        const auto& want = kReference[static_cast<std::size_t>(id - 1)];
        for (std::size_t k = 0; k < want.size(); ++k) {
            CHECK(j.partials()[k] == doctest::Approx(want[k]).epsilon(1e-12));
        }
        CHECK(test_function(id)({0.3, 0.7}) == doctest::Approx(want[0]).epsilon(1e-14));
        CHECK(test_function(id).partial({0.3, 0.7}, 2, 1) == doctest::Approx(want[7]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(TestFunction(0), ArgumentError);
    CHECK_THROWS_AS(TestFunction(11), ArgumentError);
}

TEST_CASE("test function partials against central differences")
{
    const std::vector<double> hs{1e-2, 5e-3, 2.5e-3};
    for (int id = 1; id <= kTestFunctionCount; ++id) {
        const auto& f = test_function(id);
        testing_util::Rng rng(static_cast<std::uint64_t>(id));
        std::vector<Point> pts;
        while (pts.size() < 20) {
            const Point p = rng.point();
            if (distance(p, {0.5, 0.5}) > 0.05) pts.push_back(p); // f10 is not smooth at the center
        }
        for (int order = 1; order <= 3; ++order) {
            for (int b = 0; b <= order; ++b) {
                const int a = order - b;
                // difference the (order-1) partial in x if possible, else in y
                const bool in_x = a > 0;
                std::vector<double> errs;
                for (double h : hs) {
                    const Point step = in_x ? Point{h, 0} : Point{0, h};
                    const int pa = in_x ? a - 1 : a, pb = in_x ? b : b - 1;
                    double worst = 0.0;
                    for (const auto& p : pts) {
                        const double fd = (f.partial(p + step, pa, pb) - f.partial(p - step, pa, pb)) / (2 * h);
                        worst = std::max(worst, std::abs(fd - f.partial(p, a, b)));
                    }
                    errs.push_back(worst);
                }
                const double slope = testing_util::loglog_slope(hs, errs);
                INFO("f" << id << " partial (" << a << "," << b << ")");
                CHECK(slope >= 1.7);
                CHECK(slope <= 2.3);
            }
        }
    }
}

TEST_CASE("node generation")
{
    const NodeSet g = generate_nodes(NodeKind::grid, 4, 99);
    CHECK(std::vector<Point>(g.points().begin(), g.points().end()) == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(generate_nodes(NodeKind::grid, 7, 1).size() == 7);
    CHECK_THROWS_AS(generate_nodes(NodeKind::uniform_random, 2, 1), ArgumentError);

    for (NodeKind kind : {NodeKind::uniform_random, NodeKind::grid, NodeKind::clustered}) {
        const NodeSet a = generate_nodes(kind, 202, 1);
        const NodeSet b = generate_nodes(kind, 202, 1);
        CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
        std::set<std::pair<double, double>> distinct;
        for (const auto& p : a.points()) {
            CHECK(p.x >= 0.0);
            CHECK(p.x <= 1.0);
            CHECK(p.y >= 0.0);
            CHECK(p.y <= 1.0);
            distinct.emplace(p.x, p.y);
        }
        CHECK(distinct.size() == 202);
    }
    const NodeSet other = generate_nodes(NodeKind::uniform_random, 202, 2);
    CHECK_FALSE(other[0] == generate_nodes(NodeKind::uniform_random, 202, 1)[0]);
    CHECK(parse_node_kind("clustered") == NodeKind::clustered);
    CHECK_THROWS_AS(parse_node_kind("hex"), ArgumentError);
}

TEST_CASE("benchmark rows")
{
    NodeSpec spec;
    spec.sizes = {202};
    const GridSpec grid{0, 1, 0, 1, 30, 30};
    const std::vector<OperatorId> ops{OperatorId::sb3, OperatorId::st2, OperatorId::bshep32, OperatorId::bshep33,
                                      OperatorId::qshep2d};
    const auto rows = run_benchmark(ops, {1, 4}, spec, grid, {});
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].op == "sb3");
    CHECK(rows[5].function == 4);
    CHECK(rows[2].n_q == 13);
    CHECK(rows[3].n_q == 17);
    CHECK(rows[0].n_q == 0);
    for (const auto& r : rows) {
        CHECK(r.status == "ok");
        CHECK(r.n == 202);
        CHECK(r.n_w == 9);
        CHECK(r.seed == 1);
        CHECK(r.max_abs > 0);
    }

    const auto again = run_benchmark(ops, {1, 4}, spec, grid, {});
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(again[k].max_abs == rows[k].max_abs);
        CHECK(again[k].rms == rows[k].rms);
    }
    // dropping operators and functions leaves the remaining rows untouched
    const auto subset = run_benchmark({OperatorId::bshep33}, {4}, spec, grid, {});
    REQUIRE(subset.size() == 1);
    CHECK(subset[0].max_abs == rows[8].max_abs);

    // a failing row does not stop the others
    spec.kind = NodeKind::grid;
    const auto mixed = run_benchmark({OperatorId::sb3, OperatorId::bshep32}, {10}, spec, grid, {});
    CHECK(mixed[0].status != "ok");
    CHECK(mixed[1].status == "ok");
    CHECK(parse_operator("qshep2d") == OperatorId::qshep2d);
    CHECK_THROWS_AS(parse_operator("cshep2d"), ArgumentError);
}

TEST_CASE("node files")
{
    const NodeSet nodes = generate_nodes(NodeKind::uniform_random, 40, 3);
    NodeData data;
    data.points.assign(nodes.points().begin(), nodes.points().end());
    data.jets.emplace();
    for (const auto& p : data.points) data.jets->push_back(test_function(1).jet(p, 2));
    std::stringstream ss;
    write_nodes_csv(ss, data);
    CHECK(ss.str().rfind("x,y,f,fx,fy,fxx,fxy,fyy\n", 0) == 0);
    const NodeData back = read_nodes_csv(ss);
    CHECK(back.points == data.points);
    REQUIRE(back.jets);
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        CHECK(std::equal(back.jets->at(i).partials().begin(), back.jets->at(i).partials().end(),
                         data.jets->at(i).partials().begin()));
    }

    std::stringstream plain("x,y\n0.1,0.2\n0.3,0.4\n");
    const NodeData p = read_nodes_csv(plain);
    CHECK(p.points.size() == 2);
    CHECK_FALSE(p.values);
    std::stringstream values("x,y,f\n0.1,0.2,3\n");
    CHECK(read_nodes_csv(values).values->at(0) == 3.0);
    std::stringstream bad_header("a,b\n1,2\n");
    CHECK_THROWS_AS(read_nodes_csv(bad_header), ArgumentError);
    std::stringstream bad_row("x,y\n1,zz\n");
    CHECK_THROWS_AS(read_nodes_csv(bad_row), ArgumentError);
    CHECK_THROWS_AS(read_nodes_csv(std::string("/nonexistent/nodes.csv")), ArgumentError);
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("reports and models")
{
    NodeSpec spec;
    spec.sizes = {60};
    const auto rows = run_benchmark({OperatorId::sb3}, {2}, spec, GridSpec{0, 1, 0, 1, 10, 10}, {});
    std::stringstream report;
    write_report_csv(report, rows);
    std::string header;
    std::getline(report, header);
    CHECK(header == "operator,function,n,n_w,n_q,seed,max_abs,rms,runtime,status");
    std::stringstream plot;
    write_plot_csv(plot, rows);
    std::getline(plot, header);
    CHECK(header == "function,n,operator,max_abs");

    const NodeSet nodes = generate_nodes(NodeKind::uniform_random, 80, 4);
    std::vector<double> values;
    for (const auto& p : nodes.points()) values.push_back(test_function(5)(p));
    Config c;
    c.jet_source = JetSource::wls_cubic;
    c.n_q = 17;
    c.fallback = Fallback::nearest;
    for (bool analytic : {false, true}) {
        if (analytic) c.jet_source = JetSource::analytic;
        const Interpolant itp = analytic ? Interpolant::build(nodes, test_function(5).partials(), c)
                                         : Interpolant::build(nodes, values, c);
        const std::string path = temp_path(analytic ? "analytic.json" : "wls.json");
        save_model(path, itp);
        const Interpolant back = load_model(path);
        CHECK(back.config().jet_source == itp.config().jet_source);
        testing_util::Rng rng(5);
        for (int k = 0; k < 50; ++k) {
            const Point p = rng.point(-0.2, 1.2);
            CHECK(back(p) == itp(p));
        }
        std::remove(path.c_str());
    }
    const std::string junk = temp_path("junk.json");
    std::ofstream(junk) << "{\"format\": \"something else\"}";
    CHECK_THROWS_AS(load_model(junk), ArgumentError);
    std::remove(junk.c_str());
}
