#include <benchmark/benchmark.h>

#include <random>

#include "frobvol/artinian/certificates.hpp"
#include "frobvol/artinian/parseval.hpp"
#include "frobvol/gradedla/chain.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/pfaffcomb/multigraph.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/operators.hpp"

using namespace frobvol;
using coeff::FiniteField;
using coeff::GF;

namespace {

void BM_FieldMul(benchmark::State& st) {
    const auto& F = FiniteField::get(2, 16);
    GF a = F.element(12345), b = F.element(54321);
    for (auto _ : st) {
        a = a * b + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul);

void BM_PfaffianCore(benchmark::State& st) {
    auto inst = pfaffcomb::pfaffian_instance(uint32_t(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(pfaffcomb::pfaffian_core(inst.ideal));
}
BENCHMARK(BM_PfaffianCore)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateOC(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(pfaffcomb::enumerate_oc(uint32_t(st.range(0))));
}
BENCHMARK(BM_EnumerateOC)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FrobeniusSplit(benchmark::State& st) {
    auto inst = pfaffcomb::pfaffian_instance(7, 2);
    auto H0 = pfaffcomb::pfaffian_core(inst.ideal);
    auto f = poly::frobenius_power(H0) * H0;
    for (auto _ : st) benchmark::DoNotOptimize(poly::frobenius_split(f, poly::SplitMode::Shifted));
}
BENCHMARK(BM_FrobeniusSplit)->Unit(benchmark::kMillisecond);

void BM_ExplicitChainMap(benchmark::State& st) {
    auto inst = pfaffcomb::pfaffian_instance(uint32_t(st.range(0)), 2);
    auto cx = pfaffcomb::buchsbaum_eisenbud(inst.ring, inst.field);
    for (auto _ : st) {
        auto phi = pfaffcomb::explicit_phi_char2(cx);
        benchmark::DoNotOptimize(gradedla::verify_chain_map(cx, phi));
    }
}
BENCHMARK(BM_ExplicitChainMap)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RandomReduction(benchmark::State& st) {
    const uint32_t m = uint32_t(st.range(0));
    auto inst = pfaffcomb::pfaffian_instance(m, 2);
    const auto& K = FiniteField::get(2, 16);
    std::mt19937_64 rng(7);
    for (auto _ : st) benchmark::DoNotOptimize(artinian::random_reduction(inst, K, m * (m - 1) / 2 - 3, 24, rng));
}
BENCHMARK(BM_RandomReduction)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ParsevalTrial(benchmark::State& st) {
    auto inst = st.range(0) == 0 ? pfaffcomb::pfaffian_instance(5, 2) : pfaffcomb::tom_instance();
    auto H0 = st.range(0) == 0 ? pfaffcomb::pfaffian_core(inst.ideal) : pfaffcomb::tom_core(inst, {0});
    artinian::ParsevalOptions opt;
    opt.nparams = st.range(0) == 0 ? 7 : 5;
    uint64_t seed = 1;
    for (auto _ : st) benchmark::DoNotOptimize(artinian::parseval_trial(inst, H0, opt, seed++));
}
BENCHMARK(BM_ParsevalTrial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SmithParity(benchmark::State& st) {
    auto graphs = pfaffcomb::all_cubic_graphs(8);
    for (auto _ : st) {
        uint64_t total = 0;
        for (const auto& g : graphs) total += pfaffcomb::hamiltonian_parity(g, g.edges.front());
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SmithParity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
