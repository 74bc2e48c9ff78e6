#include <benchmark/benchmark.h>

#include "deceq/derivations.hpp"
#include "deceq/imp.hpp"
#include "deceq/laws.hpp"

using namespace deceq;

namespace {

std::vector<std::string> atoms(int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(std::to_string(k));
  return out;
}

void BM_SevenLaws(benchmark::State& st) {
  FiniteModel m = make_model({{"V", atoms(static_cast<int>(st.range(0)))}}, {{"x", "V"}, {"y", "V"}});
  for (auto _ : st) benchmark::DoNotOptimize(check_laws(m));
}
BENCHMARK(BM_SevenLaws)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckScript(benchmark::State& st) {
  Theory th = states_theory({{"x", ObjType::base("V")}, {"y", ObjType::base("V")}});
  proof::ProofScript s = proof::derive_law(th, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(proof::check_script(s, th));
  st.counters["steps"] = static_cast<double>(s.steps.size());
}
BENCHMARK(BM_CheckScript)->DenseRange(1, 7);

void BM_ImpEquiv(benchmark::State& st) {
  FiniteModel m = make_model({{"V", atoms(3)}}, {{"x", "V"}, {"y", "V"}, {"v", "V"}}, {{"e", "V"}});
  imp::CmdPtr a = imp::parse("while not x = 0 do { x := x - 1; try { throw e(x) } catch e(v) { y := v } }");
  imp::CmdPtr b = imp::parse("if x = 0 then { skip } else { x := 0; y := 0 }");
  int fuel = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(imp::check_equiv(*a, *b, m, fuel));
}
BENCHMARK(BM_ImpEquiv)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
