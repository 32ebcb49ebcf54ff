#include <benchmark/benchmark.h>

#include <random>

#include "valform/forms.hpp"
#include "valform/genseries.hpp"
#include "valform/logpair.hpp"
#include "valform/valuation.hpp"

using namespace valform;

namespace {

VariableContext vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableContext(std::move(names));
}

Polynomial dense(const VariableContext& ctx, int degree) {
  Polynomial p(ctx);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(1, 9), exp(0, degree);
  for (int k = 0; k < 4 * degree * static_cast<int>(ctx.size()); ++k) {
    Monomial m;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (const int e = exp(rng)) m = m * Monomial::variable(i, e);
    p += Polynomial::term(ctx, m, coeff(rng));
  }
  return p;
}

void BM_ValuePoly(benchmark::State& state) {
  const VariableContext ctx = vars(4);
  const Polynomial p = dense(ctx, static_cast<int>(state.range(0)));
  const auto nu = ValuationSpec::monomial(ctx, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(value_poly(nu, p));
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_ValuePoly)->Arg(4)->Arg(16)->Arg(64);

void BM_JacobianDet(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const VariableContext ctx = vars(n);
  std::vector<RationalFunction> fs;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = Polynomial::variable(ctx, i);
    for (std::size_t j = i + 1; j < n; ++j) p += Polynomial::variable(ctx, i) * Polynomial::variable(ctx, j);
    fs.emplace_back(p);
  }
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_det(fs, ctx));
}
BENCHMARK(BM_JacobianDet)->DenseRange(2, 6);

void BM_ValuateForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const VariableContext ctx = vars(n);
  const auto nu = ValuationSpec::quasi_monomial(ctx, std::vector<GroupElement>(n, GroupElement{1}));
  const TopForm omega = TopForm::coordinate(RationalFunction(dense(ctx, 3), dense(ctx, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(valuate_form(omega, nu));
}
BENCHMARK(BM_ValuateForm)->DenseRange(2, 4);

void BM_SeriesInvert(benchmark::State& state) {
  const OrderedGroupSpec g{2};
  GenSeries::Support terms{{GroupElement{0, 0}, 1}, {GroupElement{0, 1}, -1}, {GroupElement{1, -2}, 3}, {GroupElement{1, 0}, 2}};
  const GenSeries s(g, terms);
  InversePolicy policy;
  policy.max_terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(s, policy));
}
BENCHMARK(BM_SeriesInvert)->Arg(8)->Arg(32)->Arg(128);

void BM_ProbeGlobal(benchmark::State& state) {
  const VariableContext ctx = vars(4);
  std::vector<DivisorComponent> d;
  for (std::size_t i = 0; i < 4; ++i) d.push_back({Rational(1, 2), RationalFunction::variable(ctx, i)});
  const LogPair pair(ctx, Divisor(std::move(d)));
  for (auto _ : state)
    benchmark::DoNotOptimize(probe_global(pair, ProbeMode::Klt, 1000, 1, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ProbeGlobal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
