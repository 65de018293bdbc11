#include <benchmark/benchmark.h>

#include <random>

#include "heartglue/model.hpp"
#include "heartglue/upperset.hpp"

using namespace heartglue;

namespace {

void BM_PerversityRoundTrip(benchmark::State& state) {
    std::vector<Perversity> ps = enumerate_perversities(-2, 2, -2, 2);
    for (auto _ : state) {
        for (const Perversity& p : ps) {
            Perversity back = to_perversity(to_upperset_op(p));
            benchmark::DoNotOptimize(back);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size()));
}
BENCHMARK(BM_PerversityRoundTrip);

void BM_PerversityCompare(benchmark::State& state) {
    std::vector<Perversity> ps = enumerate_perversities(-2, 2, -2, 2);
    for (auto _ : state) {
        for (const Perversity& p : ps)
            for (const Perversity& q : ps) benchmark::DoNotOptimize(compare(p, q));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size() * ps.size()));
}
BENCHMARK(BM_PerversityCompare);

void BM_GluableKoszul(benchmark::State& state) {
    SliceSystem s{z_lex_zhat(), std::make_shared<KoszulOracle>()};
    HeartWindow w{-static_cast<Int>(state.range(0)), static_cast<Int>(state.range(0)), 8};
    for (auto _ : state) benchmark::DoNotOptimize(is_gluable(s, w));
}
BENCHMARK(BM_GluableKoszul)->Arg(4)->Arg(8);

void BM_ReorderTower(benchmark::State& state) {
    std::mt19937_64 rng(101);
    SliceSystem s = semisimple_system(z_lex_zhat());
    ZSetMap e = ZSetMap::exchange(ZToset::integers(), ZToset::integers_trivial());
    Cut cut = Cut::first_coord(0);
    std::vector<BigradedObject> objects;
    for (int i = 0; i < 64; ++i) objects.push_back(random_bigraded(rng, 6, -4, 4, -4, 4));
    for (auto _ : state) {
        for (const BigradedObject& x : objects)
            benchmark::DoNotOptimize(reorder_tower(hn_tower(x), e, s, cut));
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_ReorderTower);

}  // namespace

BENCHMARK_MAIN();
