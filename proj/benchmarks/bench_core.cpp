#include <benchmark/benchmark.h>

#include <random>

#include "cesbohr/cesaro.hpp"
#include "cesbohr/radii.hpp"
#include "cesbohr/sturm.hpp"
#include "cesbohr/verify.hpp"

namespace {

void PhiClosedForm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double r = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::phi(k, r));
    r = r < 0.9 ? r + 1e-9 : 0.37;
  }
}
BENCHMARK(PhiClosedForm)->Arg(1)->Arg(8)->Arg(50);

void EnvelopeResidual(benchmark::State& state) {
  const auto eq = cesbohr::radii::RadiusEquation::theorem1_phi();
  double r = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::radii::residual(eq, r));
    r = r < 0.9 ? r + 1e-9 : 0.2;
  }
}
BENCHMARK(EnvelopeResidual);

void CertifiedBisection(benchmark::State& state) {
  const auto eq = cesbohr::radii::RadiusEquation::theorem1_phi();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::radii::solve(eq, 0.3, 0.4935));
  }
}
BENCHMARK(CertifiedBisection);

void SturmChainF(benchmark::State& state) {
  const auto F = cesbohr::sturm::RationalPoly::from_coeff_list("39 -45 -7 43 13 -11 3 -3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cesbohr::sturm::count_roots(F, cesbohr::sturm::Rational(0), cesbohr::sturm::Rational(1)));
  }
}
BENCHMARK(SturmChainF);

void GridClaimB2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::verify::check_claim("B2", {static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(GridClaimB2)->Arg(500)->Arg(2000);

void GeneralLeftSide(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const cesbohr::CoeffSeq f = cesbohr::verify::random_certified_sequence(rng);
  const cesbohr::Radius r(0.43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::theorem1_lhs_general(f, r));
  }
}
BENCHMARK(GeneralLeftSide);

void CesaroQuadrature(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const cesbohr::CoeffSeq f = cesbohr::verify::random_certified_sequence(rng);
  const std::complex<double> z{0.6, 0.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesbohr::cesaro_eval_integral(
        [&f, z](double t) {
          std::complex<double> acc{0.0, 0.0};
          for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * (t * z) + *it;
          return acc;
        },
        z));
  }
}
BENCHMARK(CesaroQuadrature);

}  // namespace

BENCHMARK_MAIN();
