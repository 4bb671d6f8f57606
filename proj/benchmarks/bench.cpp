#include <random>

#include <benchmark/benchmark.h>

#include <bs23/britton.hpp>
#include <bs23/kernel_basis.hpp>

using namespace bs23;

namespace {

Word sample_word(int syllables) {
    std::mt19937_64 rng(42);
    Word u;
    while (static_cast<int>(u.size()) < syllables)
        u *= random_word(rng, syllables, 5);
    return u;
}

Word sample_kernel_element(int parts) {
    std::mt19937_64 rng(7);
    const Word v = Word::parse("[b a b^-1, a]");
    Word u;
    for (int p = 0; p < parts; ++p)
        u *= conjugate(random_word(rng, 5, 3),
                       rng() % 2 == 0 ? v : v.inverse());
    return u;
}

void BM_britton_reduce(benchmark::State &state) {
    const Word u = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(britton_reduce(u));
}

void BM_normal_form(benchmark::State &state) {
    const Word u = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(u));
}

void BM_decompose(benchmark::State &state) {
    const Word u = sample_kernel_element(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(u));
}

} // namespace

BENCHMARK(BM_britton_reduce)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_normal_form)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_decompose)->Arg(1)->Arg(3);

BENCHMARK_MAIN();
