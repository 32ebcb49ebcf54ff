#include "valform/logpair.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "valform/errors.hpp"
#include "valform/linalg.hpp"

namespace valform {

namespace {

constexpr const char* kModule = "logpair";

void require_context(const VariableContext& a, const VariableContext& b) {
  if (!(a == b)) throw Error(kModule, ErrorCode::ContextMismatch, "pair and valuation live in different contexts");
}

}  // namespace

Divisor::Divisor(std::vector<DivisorComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.coefficient == 0) throw Error(kModule, ErrorCode::InvalidArgument, "zero divisor coefficient");
    if (c.function.is_zero()) throw Error(kModule, ErrorCode::ZeroFunction, "div(0) is undefined");
  }
}

Divisor Divisor::principal(RationalFunction h, const Rational& coefficient) {
  return Divisor({DivisorComponent{coefficient, std::move(h)}});
}

Divisor Divisor::operator+(const Divisor& other) const {
  std::vector<DivisorComponent> all = components_;
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  return Divisor(std::move(all));
}

Divisor Divisor::scaled(const Rational& c) const {
  if (c == 0) return Divisor();
  std::vector<DivisorComponent> all = components_;
  for (auto& comp : all) comp.coefficient *= c;
  return Divisor(std::move(all));
}

GroupElement divisor_value(const ValuationSpec& nu, const Divisor& d) {
  GroupElement v = GroupElement::zero(nu.group_dim());
  for (const auto& c : d.components()) v += scale(c.coefficient, value(nu, c.function));
  return v;
}

LogPair::LogPair(VariableContext ctx, Divisor boundary) : ctx_(std::move(ctx)), boundary_(std::move(boundary)) {
  for (const auto& c : boundary_.components()) require_context(c.function.context(), ctx_);
}

GroupElement log_discrepancy(const LogPair& pair, const ValuationSpec& nu) {
  require_context(pair.context(), nu.context());
  const TopForm omega0 = TopForm::coordinate(RationalFunction::constant(pair.context(), 1));
  return valuate_form(omega0, nu) - divisor_value(nu, pair.boundary());
}

GroupElement log_discrepancy(const LogPair& pair, const TopForm& omega, const ValuationSpec& nu) {
  require_context(pair.context(), nu.context());
  require_context(pair.context(), omega.context());
  // On this chart K^omega = div(g) for omega = g * omega_0.
  const GroupElement canonical = value(nu, omega.coordinate_coefficient());
  return valuate_form(omega, nu) - (canonical + divisor_value(nu, pair.boundary()));
}

Rational lct(const LogPair& pair, const Divisor& h, const ValuationSpec& nu) {
  if (nu.group_dim() != 1)
    throw Error(kModule, ErrorCode::RankNotOne,
                "lct needs a rank-one place, got group dimension " + std::to_string(nu.group_dim()));
  const GroupElement hv = divisor_value(nu, h);
  if (!hv.is_positive()) throw Error(kModule, ErrorCode::NonpositiveHValue, "nu(H) = " + to_string(hv));
  return log_discrepancy(pair, nu)[0] / hv[0];
}

DiscrepancyDecomposition decompose_discrepancy(const LogPair& pair, const ValuationSpec& nu) {
  if (!nu.is_adapted()) throw Error(kModule, ErrorCode::NonAdaptedWeights, "decomposition needs adapted coordinates");
  const GroupElement a = log_discrepancy(pair, nu);
  DiscrepancyDecomposition out;
  out.basis = nu.basis();
  std::vector<GroupElement> basis_weights;
  for (auto i : out.basis) basis_weights.push_back(nu.weight(i));
  auto n = linalg::coordinates_in_span(basis_weights, a);
  if (!n) throw Error(kModule, ErrorCode::InconsistentSpan, to_string(a) + " is outside the span of the basis weights");
  out.coefficients = std::move(*n);

  const VariableContext& ctx = nu.context();
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    std::vector<GroupElement> w(ctx.size(), GroupElement::zero(1));
    w[out.basis[k]] = GroupElement{1};
    const Rational ak = log_discrepancy(pair, ValuationSpec::monomial(ctx, std::move(w)))[0];
    if (ak != out.coefficients[k])
      throw Error(kModule, ErrorCode::InconsistentSpan,
                  "coefficient of " + ctx.name(out.basis[k]) + " is " + to_string(out.coefficients[k]) +
                      " but the divisorial discrepancy is " + to_string(ak));
    out.divisorial.push_back(ak);
  }
  return out;
}

namespace {

Rational random_rational(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

ValuationSpec random_adapted_spec(const VariableContext& ctx, std::mt19937_64& rng) {
  const std::size_t n = ctx.size();
  std::uniform_int_distribution<std::size_t> pick_k(1, n);
  const std::size_t k = pick_k(rng);
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng);
  vars.resize(k);

  while (true) {
    std::vector<GroupElement> basis_weights;
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<Rational> c(k);
      for (auto& x : c) x = random_rational(rng, -3, 5);
      GroupElement w(std::move(c));
      if (w.is_negative()) w = -w;
      basis_weights.push_back(std::move(w));
    }
    if (std::any_of(basis_weights.begin(), basis_weights.end(), [](const GroupElement& w) { return w.is_zero(); }) ||
        linalg::rank(basis_weights) != k)
      continue;
    std::vector<GroupElement> weights(n, GroupElement::zero(k));
    for (std::size_t r = 0; r < k; ++r) weights[vars[r]] = basis_weights[r];
    return ValuationSpec::monomial(ctx, std::move(weights));
  }
}

}  // namespace

std::vector<ValuationSpec> probe_samples(const VariableContext& ctx, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ValuationSpec> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    if (s < ctx.size()) {
      std::vector<GroupElement> w(ctx.size(), GroupElement::zero(1));
      w[s] = GroupElement{1};
      out.push_back(ValuationSpec::monomial(ctx, std::move(w)));
    } else {
      out.push_back(random_adapted_spec(ctx, rng));
    }
  }
  return out;
}

ProbeReport probe_global(const LogPair& pair, ProbeMode mode, std::size_t samples, std::uint64_t seed,
                         unsigned threads) {
  const auto specs = probe_samples(pair.context(), samples, seed);
  std::vector<std::optional<GroupElement>> bad(specs.size());

  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      GroupElement a = log_discrepancy(pair, specs[s]);
      const bool fine = mode == ProbeMode::Klt ? a.is_positive() : !a.is_negative();
      if (!fine) bad[s] = std::move(a);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, specs.size() / 64)));
  if (threads <= 1) {
    evaluate(0, specs.size());
  } else {
    // Contiguous chunks; every sample writes only its own slot.
    std::vector<std::thread> pool;
    const std::size_t chunk = (specs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(specs.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(evaluate, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  ProbeReport report;
  report.mode = mode;
  report.samples = specs.size();
  for (std::size_t s = 0; s < specs.size(); ++s)
    if (bad[s]) report.violations.push_back({s, specs[s], *bad[s]});
  return report;
}

Divisor different(const LogPair& pair, const ValuationSpec& nu) {
  if (!nu.is_adapted()) throw Error(kModule, ErrorCode::NonAdaptedWeights, "the different needs adapted coordinates");
  const VariableContext& ctx = nu.context();
  std::vector<const DivisorComponent*> rest;
  for (const auto& comp : pair.boundary().components()) {
    const bool is_basis_component =
        comp.coefficient == 1 && std::any_of(nu.basis().begin(), nu.basis().end(), [&](std::size_t i) {
          return comp.function == RationalFunction::variable(ctx, i);
        });
    if (is_basis_component) continue;
    const GroupElement v = value(nu, comp.function);
    if (!v.is_zero())
      throw Error(kModule, ErrorCode::NonzeroBoundaryValue,
                  "nu(" + to_string(comp.function) + ") = " + to_string(v) + "; restriction to the center is undefined");
    rest.push_back(&comp);
  }
  const GroupElement a = log_discrepancy(pair, nu);
  if (!a.is_zero()) throw Error(kModule, ErrorCode::NotLcPlace, "a(X, D, nu) = " + to_string(a));

  std::vector<DivisorComponent> out;
  for (const DivisorComponent* comp : rest) {
    RationalFunction r = residue(nu, comp->function);
    if (r.numerator().is_constant() && r.denominator().is_constant()) continue;  // div of a constant
    out.push_back({comp->coefficient, std::move(r)});
  }
  return Divisor(std::move(out));
}

AdjunctionReport adjunction_identity_check(const LogPair& pair, const ValuationSpec& nu, const ValuationSpec& mu) {
  const Divisor delta = different(pair, nu);
  const ValuationSpec composed = ValuationSpec::compose(nu, mu);
  AdjunctionReport report{log_discrepancy(pair, composed), {}, {}, false};
  std::vector<DivisorComponent> rebased;
  for (const auto& c : delta.components()) rebased.push_back({c.coefficient, rebase(c.function, mu.context())});
  report.center = log_discrepancy(LogPair(mu.context(), Divisor(std::move(rebased))), mu);
  report.center_embedded = include_subgroup(composed.layout(), report.center);
  report.equal = report.ambient == report.center_embedded;
  return report;
}

std::string to_string(const Divisor& d) {
  if (d.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < d.components().size(); ++i) {
    const auto& c = d.components()[i];
    if (i) out += " + ";
    out += to_string(c.coefficient) + "*div(" + to_string(c.function) + ")";
  }
  return out;
}

}  // namespace valform
