#include <benchmark/benchmark.h>

#include "opdl/classify.hpp"

using namespace opdl;

namespace {

const PolyMatrix& consequence_matrix() {
    static const PolyMatrix m = [] {
        Classifier cls(build_com_lie_system());
        return cls.consequence_matrix();
    }();
    return m;
}

const std::vector<Poly>& obstruction_generators() {
    static const std::vector<Poly> gens = [] {
        Classifier cls(build_com_lie_system());
        return cls.obstruction_generators();
    }();
    return gens;
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
    const Poly a = Poly::parse(3, "t1^2 - 2*t1*t2 + t3 - 1");
    const Poly b = Poly::parse(3, "3*t2^2 + t1*t3 - 5");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

static void BM_Straighten(benchmark::State& state) {
    const auto tree = RawTree::make_node(
        Generator::Lie,
        RawTree::make_node(Generator::Lie, RawTree::make_leaf(1),
                           RawTree::make_node(Generator::Lie, RawTree::make_leaf(3),
                                              RawTree::make_leaf(4))),
        RawTree::make_leaf(2));
    for (auto _ : state) benchmark::DoNotOptimize(straighten(tree));
}
BENCHMARK(BM_Straighten);

static void BM_RrefRelations(benchmark::State& state) {
    const auto mat = relation_matrix(build_com_lie_system());
    for (auto _ : state) benchmark::DoNotOptimize(rref_unit_pivots(mat));
}
BENCHMARK(BM_RrefRelations);

static void BM_ConsequenceMatrix(benchmark::State& state) {
    const auto rsys = rref_system(build_com_lie_system());
    for (auto _ : state) benchmark::DoNotOptimize(consequences_arity4(rsys));
}
BENCHMARK(BM_ConsequenceMatrix)->Unit(benchmark::kMillisecond);

static void BM_PartialSmith(benchmark::State& state) {
    const auto& m = consequence_matrix();
    for (auto _ : state) benchmark::DoNotOptimize(partial_smith(m));
}
BENCHMARK(BM_PartialSmith)->Unit(benchmark::kMillisecond);

static void BM_GroebnerObstruction(benchmark::State& state) {
    const auto& gens = obstruction_generators();
    for (auto _ : state) benchmark::DoNotOptimize(groebner(gens));
}
BENCHMARK(BM_GroebnerObstruction)->Unit(benchmark::kMillisecond);

static void BM_RankAtPoint(benchmark::State& state) {
    const auto& m = consequence_matrix();
    const std::vector<Rational> p = {Rational(1), Rational(0), Rational(7)};
    for (auto _ : state) benchmark::DoNotOptimize(rational_rank(m.eval(p)));
}
BENCHMARK(BM_RankAtPoint)->Unit(benchmark::kMillisecond);

static void BM_FullClassification(benchmark::State& state) {
    for (auto _ : state) {
        Classifier cls(build_com_lie_system());
        benchmark::DoNotOptimize(cls.run());
    }
}
BENCHMARK(BM_FullClassification)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
