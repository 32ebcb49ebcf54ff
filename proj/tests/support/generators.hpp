#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "valform/funfield.hpp"
#include "valform/genseries.hpp"
#include "valform/linalg.hpp"
#include "valform/ordgroup.hpp"
#include "valform/valuation.hpp"

namespace valform::testing {

// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int bound = 5, int den_bound = 3) {
    Rational q(integer(-bound, bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int bound = 5, int den_bound = 3) {
    for (;;) {
      Rational q = rational(bound, den_bound);
      if (q != 0) return q;
    }
  }

  GroupElement element(std::size_t d, int bound = 4, int den_bound = 2) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(rational(bound, den_bound));
    return GroupElement(std::move(c));
  }

  Monomial monomial(std::size_t nvars, int max_exp = 3, bool negative = false) {
    Monomial m;
    for (std::size_t i = 0; i < nvars; ++i) {
      const int e = integer(negative ? -max_exp : 0, max_exp);
      if (e != 0) m = m * Monomial::variable(i, e);
    }
    return m;
  }

  Polynomial polynomial(const VariableContext& ctx, std::size_t max_terms = 4, int max_exp = 3,
                        bool negative = false) {
    for (;;) {
      Polynomial p(ctx);
      const std::size_t terms = static_cast<std::size_t>(integer(1, static_cast<int>(max_terms)));
      for (std::size_t k = 0; k < terms; ++k)
        p += Polynomial::term(ctx, monomial(ctx.size(), max_exp, negative), nonzero_rational());
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction function(const VariableContext& ctx, std::size_t max_terms = 3, int max_exp = 2) {
    if (coin()) return RationalFunction(polynomial(ctx, max_terms, max_exp));
    return RationalFunction(polynomial(ctx, max_terms, max_exp), polynomial(ctx, 2, max_exp));
  }

  // d x d rational matrix of full rank, as rows.
  std::vector<GroupElement> independent(std::size_t d, int bound = 3) {
    for (;;) {
      std::vector<GroupElement> rows;
      for (std::size_t i = 0; i < d; ++i) rows.push_back(element(d, bound, 2));
      if (linalg::rank(rows) == d) return rows;
    }
  }

  // Adapted monomial spec: a random basis subset of size d with independent
  // weights, zero weight on the rest.
  ValuationSpec adapted(const VariableContext& ctx, std::size_t d) {
    const std::size_t n = ctx.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    const auto rows = independent(d);
    std::vector<GroupElement> weights(n, GroupElement::zero(d));
    std::vector<std::string> basis, residue;
    for (std::size_t k = 0; k < n; ++k) {
      if (k < d) {
        weights[order[k]] = rows[k];
        basis.push_back(ctx.name(order[k]));
      } else {
        residue.push_back(ctx.name(order[k]));
      }
    }
    return ValuationSpec::monomial(ctx, std::move(weights), basis, residue);
  }

  // Exact finite series on Q^d with up to max_terms terms; with front_nonneg the
  // first `front` coordinates of every exponent are lex-nonnegative.
  GenSeries series(std::size_t d, std::size_t max_terms = 4, std::size_t front = 0) {
    GenSeries::Support terms;
    const int count = integer(1, static_cast<int>(max_terms));
    for (int k = 0; k < count; ++k) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < d; ++i) c.push_back(rational(3, 2));
      if (front > 0) {
        for (std::size_t i = 0; i < front; ++i) {
          if (c[i] > 0) break;
          if (c[i] < 0) {
            c[i] = -c[i];
            break;
          }
        }
        if (coin())
          for (std::size_t i = 0; i < front; ++i) c[i] = 0;
      }
      terms[GroupElement(std::move(c))] += nonzero_rational();
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    if (terms.empty()) terms[GroupElement::zero(d)] = 1;
    return GenSeries(OrderedGroupSpec{d}, std::move(terms));
  }

  ValuationSpec adapted(const VariableContext& ctx) {
    return adapted(ctx, static_cast<std::size_t>(integer(1, static_cast<int>(ctx.size()))));
  }

 private:
  std::mt19937_64 rng_;
};

inline VariableContext vars(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return VariableContext(std::move(names));
}

// Independent oracle: value of a polynomial by explicit term enumeration.
inline GroupElement enumerate_value(const Polynomial& p, const std::vector<GroupElement>& weights) {
  const std::size_t d = weights.front().dim();
  bool first = true;
  GroupElement best = GroupElement::zero(d);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Rational> coords(d, Rational(0));
    for (const auto& [var, e] : m.factors())
      for (std::size_t j = 0; j < d; ++j) coords[j] += e * weights[var][j];
    GroupElement v(std::move(coords));
    bool smaller = first;
    if (!first) {
      for (std::size_t j = 0; j < d; ++j) {
        if (v[j] != best[j]) {
          smaller = v[j] < best[j];
          break;
        }
      }
    }
    if (smaller) best = v;
    first = false;
  }
  return best;
}

// Independent oracle: Leibniz permutation expansion of a small rational determinant.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational prod = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace valform::testing
