// Microbenchmarks for the enumeration-heavy paths: legality sweeps, face
// enumeration, minimal non-faces and the arena equivalence search. All of
// these run below the process-wide analysis cache, so iterations measure
// real work.

#include <benchmark/benchmark.h>

#include "placement/complex.hpp"
#include "placement/play.hpp"
#include "placement/ruleset.hpp"
#include "placement/transform.hpp"

using namespace placement;

namespace {

std::shared_ptr<const Ruleset> game(int which) {
  switch (which) {
    case 0: return snort_ruleset();
    case 1: return col_ruleset();
    default: return nogo_ruleset();
  }
}

void BM_LegalitySweep(benchmark::State& state) {
  GameInstance instance(game(static_cast<int>(state.range(0))),
                        Board::path(static_cast<int>(state.range(1))));
  const std::uint64_t space = std::uint64_t{1} << instance.universe().size();
  for (auto _ : state) {
    std::uint64_t legal = 0;
    for (std::uint64_t mask = 0; mask < space; ++mask)
      legal += instance.is_legal_mask(mask) ? 1 : 0;
    benchmark::DoNotOptimize(legal);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(space) * state.iterations());
}
BENCHMARK(BM_LegalitySweep)
    ->ArgsProduct({{0, 1, 2}, {4, 6, 8}})
    ->ArgNames({"game", "path"});

void BM_FVector(benchmark::State& state) {
  SimplicialComplex delta =
      legal_complex(col_ruleset(), Board::path(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    FVector fv = delta.f_vector();
    benchmark::DoNotOptimize(fv);
  }
}
BENCHMARK(BM_FVector)->Arg(6)->Arg(9)->Arg(12)->ArgName("path");

void BM_MinimalNonFaces(benchmark::State& state) {
  SimplicialComplex delta =
      legal_complex(col_ruleset(), Board::path(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto mnf = delta.minimal_non_faces();
    benchmark::DoNotOptimize(mnf);
  }
}
BENCHMARK(BM_MinimalNonFaces)->Arg(6)->Arg(9)->Arg(12)->ArgName("path");

void BM_SrComplex(benchmark::State& state) {
  MonomialIdeal gamma_ideal =
      illegal_ideal(col_ruleset(), Board::path(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    SimplicialComplex complex = sr_complex(gamma_ideal);
    benchmark::DoNotOptimize(complex);
  }
}
BENCHMARK(BM_SrComplex)->Arg(5)->Arg(7)->Arg(9)->ArgName("path");

void BM_StrongPlacement(benchmark::State& state) {
  Board board = Board::path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = check_strong_placement(*col_ruleset(), board);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_StrongPlacement)->Arg(4)->Arg(6)->Arg(8)->ArgName("path");

void BM_ArenaEquivalence(benchmark::State& state) {
  Board board = Board::path(static_cast<int>(state.range(0)));
  auto analysis = analyze(col_ruleset(), board);
  auto board_arena = make_board_arena(col_ruleset(), board);
  auto legal_arena = make_legal_complex_arena(analysis->legal_complex);
  auto illegal_arena = make_illegal_complex_arena(analysis->illegal_complex);
  std::vector<const Arena*> arenas = {board_arena.get(), legal_arena.get(),
                                      illegal_arena.get()};
  for (auto _ : state) {
    EquivalenceReport report = check_arena_equivalence(arenas, -1);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ArenaEquivalence)->Arg(4)->Arg(6)->Arg(8)->ArgName("path");

void BM_Isomorphism(benchmark::State& state) {
  SimplicialComplex a =
      legal_complex(col_ruleset(), Board::path(static_cast<int>(state.range(0))));
  SimplicialComplex b = legal_complex(snort_ruleset(),
                                      Board::path(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    IsomorphismResult result = are_isomorphic(a, b);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Isomorphism)->Arg(3)->Arg(4)->ArgName("path");

}  // namespace

BENCHMARK_MAIN();
