#pragma once

// Log pairs (A^n, D) on a fixed affine chart with reference form
// omega_0 = dx_1 ^ ... ^ dx_n, so that K^{omega_0} = 0, and their log
// discrepancies at monomial Abhyankar places:
//
//     a(X, D, nu) = nu(omega) - nu(K^omega + D).

#include <cstdint>
#include <random>
#include <vector>

#include "valform/forms.hpp"
#include "valform/funfield.hpp"
#include "valform/ordgroup.hpp"
#include "valform/valuation.hpp"

namespace valform {

struct DivisorComponent {
  Rational coefficient;
  RationalFunction function;
};

/// Formal Q-combination of principal divisors div(h_i). Components are never merged.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<DivisorComponent> components);
  static Divisor principal(RationalFunction h, const Rational& coefficient = 1);

  const std::vector<DivisorComponent>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }

  Divisor operator+(const Divisor& other) const;
  Divisor scaled(const Rational& c) const;

 private:
  std::vector<DivisorComponent> components_;
};

/// sum_i d_i * nu(h_i); zero for the empty divisor.
GroupElement divisor_value(const ValuationSpec& nu, const Divisor& d);

class LogPair {
 public:
  LogPair(VariableContext ctx, Divisor boundary);

  const VariableContext& context() const noexcept { return ctx_; }
  const Divisor& boundary() const noexcept { return boundary_; }

 private:
  VariableContext ctx_;
  Divisor boundary_;
};

/// a(X, D, nu) computed with omega_0 = dx_1 ^ ... ^ dx_n.
GroupElement log_discrepancy(const LogPair& pair, const ValuationSpec& nu);
/// a(X, D, nu) computed with an arbitrary reference form omega (K^omega = div of its
/// coordinate coefficient on this chart). Agrees with the omega_0 version.
GroupElement log_discrepancy(const LogPair& pair, const TopForm& omega, const ValuationSpec& nu);

/// sup{r : a(X, D + rH, nu) >= 0} at a rank-one place: a(X, D, nu) / nu(H).
Rational lct(const LogPair& pair, const Divisor& h, const ValuationSpec& nu);

struct DiscrepancyDecomposition {
  std::vector<std::size_t> basis;        ///< basis variable indices t_i
  std::vector<Rational> coefficients;    ///< n_i with a(X,D,nu) = sum n_i nu(t_i)
  std::vector<Rational> divisorial;      ///< a(X, D, nu_i) for the divisorial place of t_i
};

/// Writes a(X,D,nu) in the basis weights and checks each n_i against the
/// divisorial discrepancy along t_i. Throws InconsistentSpan on any mismatch,
/// which signals a boundary that is not adapted to the center of nu.
DiscrepancyDecomposition decompose_discrepancy(const LogPair& pair, const ValuationSpec& nu);

enum class ProbeMode { Klt, Lc };

struct ProbeViolation {
  std::size_t sample = 0;
  ValuationSpec spec;
  GroupElement discrepancy;
};

struct ProbeReport {
  ProbeMode mode = ProbeMode::Klt;
  std::size_t samples = 0;
  std::vector<ProbeViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Deterministic sample of adapted monomial specs on ctx. The first min(n, count)
/// samples are the coordinate divisorial places; the rest have a random basis
/// subset with lex-positive, independent random rational weights.
std::vector<ValuationSpec> probe_samples(const VariableContext& ctx, std::size_t count, std::uint64_t seed);

/// Checks a > 0 (klt) or a >= 0 (lc) on probe_samples(...). Evaluation may run on
/// several threads; the report does not depend on the schedule.
ProbeReport probe_global(const LogPair& pair, ProbeMode mode, std::size_t samples, std::uint64_t seed,
                         unsigned threads = 0);

/// The different Delta_Z = sum_j d_j div(res h_j) on the center {t = 0} of an lc
/// place nu, where the boundary is sum_i 1*div(t_i) + sum_j d_j div(h_j).
Divisor different(const LogPair& pair, const ValuationSpec& nu);

struct AdjunctionReport {
  GroupElement ambient;          ///< a(X, D, nu o mu)
  GroupElement center;           ///< a(Z, Delta_Z, mu)
  GroupElement center_embedded;  ///< the latter included into the composed group
  bool equal = false;
};

AdjunctionReport adjunction_identity_check(const LogPair& pair, const ValuationSpec& nu, const ValuationSpec& mu);

std::string to_string(const Divisor& d);

}  // namespace valform
