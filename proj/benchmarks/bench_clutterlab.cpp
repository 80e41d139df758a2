#include <benchmark/benchmark.h>

#include "clutterlab/decompose.hpp"
#include "clutterlab/properties.hpp"

using namespace clutterlab;

namespace {

const QpqDescriptor& star22() {
    static const QpqDescriptor d = generate_qpq_f(2, 2, FSpec::case_i_all());
    return d;
}

void BM_Blocker_Star22(benchmark::State& state) {
    Clutter c = star22().clutter();
    for (auto _ : state) {
        Clutter b = blocker(c);
        benchmark::DoNotOptimize(b.edge_count());
    }
}
BENCHMARK(BM_Blocker_Star22);

void BM_TauNu_Q11(benchmark::State& state) {
    Clutter c = generate_qpq(1, 1).clutter();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau(c).value);
        benchmark::DoNotOptimize(nu(c).value);
    }
}
BENCHMARK(BM_TauNu_Q11);

void BM_PackingProperty_Q11(benchmark::State& state) {
    Clutter c = generate_qpq(1, 1).clutter();
    for (auto _ : state) {
        PackingReport rep = has_packing_property(c);
        benchmark::DoNotOptimize(rep.packs);
    }
}
BENCHMARK(BM_PackingProperty_Q11);

void BM_PolyhedronVertices_Star11(benchmark::State& state) {
    Clutter c = generate_qpq_f(1, 1, FSpec::case_i_all()).clutter();
    for (auto _ : state) {
        auto verts = polyhedron_vertices(c);
        benchmark::DoNotOptimize(verts.size());
    }
}
BENCHMARK(BM_PolyhedronVertices_Star11);

void BM_SmithNormalForm(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    IntegerMatrix m(n, n);
    std::uint64_t x = 88172645463325252ull;  // xorshift64
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            m.at(i, j) = static_cast<long long>(x % 7) - 3;
        }
    for (auto _ : state) {
        SmithForm s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.rank());
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(10);

void BM_Decompose_Star22(benchmark::State& state) {
    const QpqDescriptor& d = star22();
    WeightVector w = WeightVector::uniform(d.n(), 3);
    for (auto _ : state) {
        DecompositionTrace trace = decompose(d, w);
        benchmark::DoNotOptimize(trace.edges.size());
    }
}
BENCHMARK(BM_Decompose_Star22);

void BM_MengerianScan_Star11(benchmark::State& state) {
    Clutter c = generate_qpq_f(1, 1, FSpec::case_i_all()).clutter();
    for (auto _ : state) {
        MengerianReport rep = is_mengerian_bounded(c, 2);
        benchmark::DoNotOptimize(rep.checked);
    }
}
BENCHMARK(BM_MengerianScan_Star11);

}  // namespace

BENCHMARK_MAIN();
