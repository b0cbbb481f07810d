#include <pisot/alpha_adic.hpp>
#include <pisot/beta.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>

#include <benchmark/benchmark.h>

using namespace pisot;

namespace {

const PisotSpec &golden() {
    static const PisotSpec s = PisotSpec::make({1, 1});
    return s;
}

const PisotSpec &three() {
    static const PisotSpec s = PisotSpec::make({1, 3});
    return s;
}

void BM_BetaExpandInteger(benchmark::State &state) {
    const FieldElement x(golden(), Rational(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_expand(x));
    }
}
BENCHMARK(BM_BetaExpandInteger)->Arg(4)->Arg(100)->Arg(10000);

void BM_BetaExpandRational(benchmark::State &state) {
    const FieldElement x(three(), Rational(1, state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_expand(x, 1000000));
    }
}
BENCHMARK(BM_BetaExpandRational)->Arg(7)->Arg(31);

void BM_AlphaExpandNegative(benchmark::State &state) {
    const FieldElement x(golden(), Rational(-state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(alpha_expand(x));
    }
}
BENCHMARK(BM_AlphaExpandNegative)->Arg(4)->Arg(100);

void BM_Enumerate(benchmark::State &state) {
    const FieldElement x(golden(), Rational(-1));
    const auto bound = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_expansions(x, bound, bound));
    }
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8);

void BM_RationalPsi(benchmark::State &state) {
    Rational q(1, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rational_alpha_represent(q, three()));
    }
}
BENCHMARK(BM_RationalPsi)->Arg(2)->Arg(29)->Arg(97);

void BM_TransducerRun(benchmark::State &state) {
    const Transducer t = build_normalization_transducer(3, 4);
    DigitWord w;
    for (long i = 0; i < state.range(0); ++i) {
        w.push_back(static_cast<Digit>((i * 7) % 4 == 3 && i % 3 == 0 ? 3 : (i * 5) % 3));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_right_sequential(t, w));
    }
}
BENCHMARK(BM_TransducerRun)->Arg(64)->Arg(1024);

} // namespace
BENCHMARK_MAIN();
