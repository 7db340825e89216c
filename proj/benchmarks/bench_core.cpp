#include <benchmark/benchmark.h>

#include "iforms/calculus.hpp"
#include "iforms/checks.hpp"
#include "iforms/tensor.hpp"

namespace {

using namespace iforms;

const Space& plane() {
    static const Space s({"x", "y", "z"});
    return s;
}

Form sample_form(std::uint64_t seed, int max_slot, int max_factors) {
    gen::Rng rng(seed);
    Form w(plane());
    for (int i = 0; i < 4; ++i) w += gen::random_form(rng, plane(), max_slot, max_factors);
    return w;
}

void bm_wedge(benchmark::State& state) {
    Form a = sample_form(1, 3, 3);
    Form b = sample_form(2, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.wedge(b));
}
BENCHMARK(bm_wedge);

void bm_differential(benchmark::State& state) {
    Form w = sample_form(3, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(d(4, w));
}
BENCHMARK(bm_differential);

void bm_iterated_differential(benchmark::State& state) {
    gen::Rng rng(4);
    Poly f = gen::random_poly(rng, plane(), 3, 4);
    IndexSet k{1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(d_iterated(k, f));
}
BENCHMARK(bm_iterated_differential);

void bm_partition_formula(benchmark::State& state) {
    gen::Rng rng(4);
    Poly f = gen::random_poly(rng, plane(), 3, 4);
    IndexSet k{1, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(d_partition(k, f));
}
BENCHMARK(bm_partition_formula);

void bm_homotopy(benchmark::State& state) {
    Form w = sample_form(5, 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(homotopy_h2(w));
}
BENCHMARK(bm_homotopy);

void bm_kappa(benchmark::State& state) {
    Form w = sample_form(6, 3, 4);
    SlotMap sigma = SlotMap::from_cycles({{1, 2, 3}});
    for (auto _ : state) benchmark::DoNotOptimize(kappa(sigma, w));
}
BENCHMARK(bm_kappa);

void bm_tensor_evaluation(benchmark::State& state) {
    gen::Rng rng(7);
    CovariantTensor t = gen::random_tensor(rng, plane(), 3);
    std::vector<VectorField> fields;
    for (int i = 0; i < 3; ++i) fields.push_back(gen::random_vector_field(rng, plane()));
    Form w = embed(t);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_insertion(w, fields));
}
BENCHMARK(bm_tensor_evaluation);

}  // namespace

BENCHMARK_MAIN();
