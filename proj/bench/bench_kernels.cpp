// Serial reference vs OpenMP kernel for each parallel hot loop.

#include <benchmark/benchmark.h>

#include "rackhopf/deform.hpp"
#include "rackhopf/smash.hpp"

using namespace rackhopf;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

const BraidedSpace& o24_minus() {
  static const BraidedSpace c = make_braiding(constant_cocycle(transposition_rack(4), -1), Flavor::V);
  return c;
}

const GroebnerBasis& eminus_basis() {
  static const GroebnerBasis g = [] {
    DeformedIdeal d = build_deformed_ideal(sample_params(Family::Eminus, 4, SampleKind::Generic, 1, 0));
    return groebner(d.generators, d.rack.size());
  }();
  return g;
}

void BM_symmetrizer_rank(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(symmetrizer_rank(o24_minus(), 4, exec_of(s)));
}

void BM_braid_equation(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(check_braid_equation(o24_minus(), exec_of(s)));
}

void BM_batch_normal_form(benchmark::State& s) {
  const GroebnerBasis& g = eminus_basis();
  std::vector<FreePoly> polys;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        polys.push_back(FreePoly::monomial(6, make_word({a, b, c, a, b, c})));
  for (auto _ : s) benchmark::DoNotOptimize(batch_normal_form(polys, g, exec_of(s)));
}

void BM_audit_obstructions(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(audit_obstructions(eminus_basis(), exec_of(s)).ok());
}

void BM_associativity_audit(benchmark::State& s) {
  // exterior algebra on 4 letters, S3 permuting the first three
  static const FiniteAlgebra smash = [] {
    const int n = 4;
    std::vector<FreePoly> ext;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        ext.push_back(i == j ? FreePoly::monomial(n, make_word({i, i}))
                             : FreePoly::monomial(n, make_word({i, j})) + FreePoly::monomial(n, make_word({j, i})));
    GroebnerBasis eg = groebner(ext, n);
    std::vector<Word> words;
    FiniteAlgebra a = quotient_algebra(eg, {"a", "b", "c", "d"}, &words);
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    ModuleAlgebraAction act = letter_action_on_quotient(eg, words, s3, [&](int h, int l) {
      return std::pair<int, Rational>{l < 3 ? s3.element(h)[l] : l, 1};
    });
    return smash_product(a, act);
  }();
  for (auto _ : s) benchmark::DoNotOptimize(associativity_audit(smash, exec_of(s)).ok());
}

void BM_verify_nonzero(benchmark::State& s) {
  VerifyOptions o;
  o.samples = 6;
  o.seed = 3;
  o.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(verify_nonzero(Family::Eminus, 4, o).all_nonzero);
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_symmetrizer_rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_braid_equation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_normal_form)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_obstructions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_associativity_audit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_nonzero)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
