#include <benchmark/benchmark.h>

#include "idcp/harness.hpp"
#include "idcp/metrics.hpp"
#include "idcp/solver.hpp"

namespace {

using namespace idcp;

RadiusAssignment uniform_radii(const Triangulation& t, double r) {
    RadiusAssignment out;
    out.geometry = Geometry::Hyperbolic;
    for (VertexId v : t.vertices()) out.r[v] = r;
    return out;
}

void BM_CurvatureHexDisk(benchmark::State& state) {
    Triangulation t = hex_disk_triangulation(static_cast<int>(state.range(0)));
    WeightAssignment eta = WeightAssignment::constant(t, 1.0);
    RadiusAssignment r = uniform_radii(t, 0.3);
    for (auto _ : state) {
        EdgeLengthTable len = edge_lengths_h(t, eta, r);
        benchmark::DoNotOptimize(curvature(t, triangle_angle_table(t, len)));
    }
}
BENCHMARK(BM_CurvatureHexDisk)->Arg(2)->Arg(3)->Arg(5);

void BM_DelaunayReport(benchmark::State& state) {
    Triangulation t = hex_disk_triangulation(static_cast<int>(state.range(0)));
    WeightAssignment eta = WeightAssignment::constant(t, 1.0);
    RadiusAssignment r = uniform_radii(t, 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_weighted_delaunay_packing(t, eta, r));
}
BENCHMARK(BM_DelaunayReport)->Arg(2)->Arg(3);

void BM_SolveFlatInterior(benchmark::State& state) {
    Triangulation t = hex_disk_triangulation(static_cast<int>(state.range(0)));
    WeightAssignment eta = WeightAssignment::constant(t, 1.0);
    SolveConfig cfg;
    for (VertexId v : t.interior_vertices()) cfg.target_K[v] = 0.0;
    LabelAssignment init;
    init.geometry = Geometry::Hyperbolic;
    for (VertexId v : t.vertices()) init.u[v] = label_from_radius(0.3, Geometry::Hyperbolic);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_prescribed_curvature(t, eta, cfg, init));
}
BENCHMARK(BM_SolveFlatInterior)->Arg(2)->Arg(3);

void BM_StarInstanceSampling(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_star_instance(6, WeightRegime::LowRange, seed++));
}
BENCHMARK(BM_StarInstanceSampling);

}  // namespace

BENCHMARK_MAIN();
