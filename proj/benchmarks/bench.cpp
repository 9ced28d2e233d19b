#include <benchmark/benchmark.h>

#include "pbcert/parse.hpp"
#include "pbcert/pbcheck.hpp"
#include "pbcert/sepideal.hpp"

namespace {

using namespace pbcert;

BranchPoint main_alpha() {
    return BranchPoint{+1, PuiseuxPoly({{Rational(2), Rational(1)}}), Side::above};
}
BranchPoint main_beta() {
    return BranchPoint{
        +1, PuiseuxPoly({{Rational(2), Rational(1)}, {Rational(3), Rational(1)}}), Side::below};
}
BranchPoint puiseux_alpha() {
    return BranchPoint{+1, PuiseuxPoly({{make_rational(3, 2), Rational(1)}}), Side::above};
}
BranchPoint puiseux_beta() {
    return BranchPoint{+1,
                       PuiseuxPoly({{make_rational(3, 2), Rational(1)},
                                    {make_rational(5, 2), Rational(1)}}),
                       Side::below};
}

void BM_EvalAtBranch(benchmark::State& state) {
    const Poly2 f = parse_polynomial("y^3 - 2x^2y + x^5 - 1/2xy^2 + x^7");
    const BranchPoint a = puiseux_alpha();
    for (auto _ : state) benchmark::DoNotOptimize(eval_at_branch(f, a).sign);
}
BENCHMARK(BM_EvalAtBranch);

void BM_CurveEquation(benchmark::State& state) {
    const PuiseuxPoly phi({{make_rational(3, 2), Rational(1)},
                           {make_rational(5, 2), make_rational(-1, 2)}});
    for (auto _ : state) benchmark::DoNotOptimize(curve_equation(phi));
}
BENCHMARK(BM_CurveEquation);

void BM_RunChainMain(benchmark::State& state) {
    const BranchPoint a = main_alpha(), b = main_beta();
    for (auto _ : state) benchmark::DoNotOptimize(run_chain(a, b).r());
}
BENCHMARK(BM_RunChainMain);

void BM_SeparatingIdealPuiseux(benchmark::State& state) {
    const BranchPoint a = puiseux_alpha(), b = puiseux_beta();
    for (auto _ : state) benchmark::DoNotOptimize(separating_ideal(a, b).threshold);
}
BENCHMARK(BM_SeparatingIdealPuiseux);

void BM_SignchangerOracle(benchmark::State& state) {
    const BranchPoint a = main_alpha(), b = main_beta();
    for (auto _ : state)
        benchmark::DoNotOptimize(signchanger_oracle(a, b, 3, 2, 3).min_value);
}
BENCHMARK(BM_SignchangerOracle);

void BM_ConnectednessWitness(benchmark::State& state) {
    const BranchPoint a = main_alpha(), b = main_beta();
    const std::vector<Poly2> gs = {parse_polynomial("xy")};
    for (auto _ : state)
        benchmark::DoNotOptimize(connectedness_witness(a, b, gs).samples.size());
}
BENCHMARK(BM_ConnectednessWitness);

}  // namespace

BENCHMARK_MAIN();
