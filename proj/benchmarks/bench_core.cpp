#include "horoct/identity.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace horoct;

Oct sample_oct(int shift) {
    Oct x;
    for (int i = 0; i < 8; ++i) x.c[i] = BigRat(shift + 3 * i - 7) / (i + 2);
    return x;
}

void BM_octonion_mul(benchmark::State& state) {
    const Oct x = sample_oct(1), y = sample_oct(5);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_octonion_mul);

void BM_dual_octonion_mul(benchmark::State& state) {
    const DualOct x{sample_oct(1), sample_oct(2)}, y{sample_oct(3), sample_oct(4)};
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_dual_octonion_mul);

void BM_window_growth(benchmark::State& state) {
    const HoradamParams hp = preset_params("fibonacci");
    for (auto _ : state) {
        SeqWindow w(hp);
        benchmark::DoNotOptimize(w.at(256));
    }
}
BENCHMARK(BM_window_growth);

void BM_binet_dog(benchmark::State& state) {
    const ClosedForms f(preset_params("fibonacci"));
    for (auto _ : state) benchmark::DoNotOptimize(binet_dog(f, 24));
}
BENCHMARK(BM_binet_dog);

void BM_dog_oracle(benchmark::State& state) {
    SeqWindow w(preset_params("fibonacci"));
    for (auto _ : state) benchmark::DoNotOptimize(dog(w, 24));
}
BENCHMARK(BM_dog_oracle);

void BM_cassini_c2(benchmark::State& state) {
    const ClosedForms f(preset_params("lucas"));
    for (auto _ : state) benchmark::DoNotOptimize(cassini_c2_as_printed(f, 8));
}
BENCHMARK(BM_cassini_c2);

void BM_norm_closed_form(benchmark::State& state) {
    SeqWindow w(preset_params("pell"));
    const ClosedForms f(preset_params("pell"));
    for (auto _ : state)
        benchmark::DoNotOptimize(norm_dog_rhs(f, w, 8, NormLead::corrected));
}
BENCHMARK(BM_norm_closed_form);

void BM_scalar_series(benchmark::State& state) {
    const HoradamParams hp = preset_params("fibonacci");
    for (auto _ : state) benchmark::DoNotOptimize(gen_series_closed(hp, 64));
}
BENCHMARK(BM_scalar_series);

void BM_dog_series(benchmark::State& state) {
    SeqWindow w(preset_params("fibonacci"));
    for (auto _ : state) benchmark::DoNotOptimize(dog_series_closed(w, 32));
}
BENCHMARK(BM_dog_series);

void BM_point_evaluation(benchmark::State& state) {
    const Registry& reg = Registry::builtin();
    const HoradamParams hp{BigRat(-1), BigRat(2), BigRat(3), BigRat(2)};
    for (auto _ : state) {
        EvalContext cx(hp);
        for (const Identity& ident : reg.all())
            for (unsigned n = 1; n <= static_cast<unsigned>(state.range(0)); ++n) {
                try {
                    benchmark::DoNotOptimize(ident.eval(cx, n));
                } catch (const DomainError&) {
                }
            }
    }
}
BENCHMARK(BM_point_evaluation)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();
