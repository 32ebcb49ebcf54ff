#include "valform/genseries.hpp"

#include <cctype>

#include "valform/errors.hpp"

namespace valform {

namespace {

constexpr const char* kModule = "genseries";

void require_same_group(const GenSeries& s, const GenSeries& t) {
  if (s.group() != t.group())
    throw Error(kModule, ErrorCode::GroupMismatch,
                "Q^" + std::to_string(s.group().dimension) + " vs Q^" + std::to_string(t.group().dimension));
}

void add_term(GenSeries::Support& terms, const GroupElement& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::optional<GroupElement> min_opt(const std::optional<GroupElement>& a, const std::optional<GroupElement>& b) {
  if (!a) return b;
  if (!b) return a;
  return lex_min(*a, *b);
}

// Combined marker of two operands; precisions are supplied by the caller.
std::optional<Truncation> merge_markers(const std::optional<Truncation>& a, const std::optional<Truncation>& b,
                                        std::optional<GroupElement> precision) {
  if (!a && !b) return std::nullopt;
  Truncation t;
  if (a && b) {
    t.max_terms = std::min(a->max_terms, b->max_terms);
    t.cutoff = min_opt(a->cutoff, b->cutoff);
  } else {
    t = a ? *a : *b;
  }
  t.precision = std::move(precision);
  return t;
}

}  // namespace

GenSeries::GenSeries(OrderedGroupSpec group, Support terms, std::optional<Truncation> truncation)
    : group_(group), truncation_(std::move(truncation)) {
  for (auto& [e, c] : terms) {
    if (e.dim() != group_.dimension)
      throw Error(kModule, ErrorCode::GroupMismatch, "exponent " + to_string(e) + " outside Q^" +
                                                         std::to_string(group_.dimension));
    if (c != 0) terms_.emplace(e, c);
  }
}

GenSeries GenSeries::monomial(OrderedGroupSpec group, const GroupElement& exponent, const Rational& coefficient) {
  Support s;
  s.emplace(exponent, coefficient);
  return GenSeries(group, std::move(s));
}

GenSeries GenSeries::constant(OrderedGroupSpec group, const Rational& c) {
  return monomial(group, GroupElement::zero(group.dimension), c);
}

Rational GenSeries::coefficient(const GroupElement& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool operator==(const GenSeries& a, const GenSeries& b) {
  return a.group_ == b.group_ && a.terms_ == b.terms_ && a.truncation_ == b.truncation_;
}

GenSeries series_from_poly(const Polynomial& p, const std::vector<GroupElement>& weights) {
  if (weights.size() != p.context().size())
    throw Error(kModule, ErrorCode::SizeMismatch, "one weight per variable required");
  if (weights.empty()) throw Error(kModule, ErrorCode::SizeMismatch, "no weights");
  const OrderedGroupSpec group{weights.front().dim()};
  GenSeries::Support terms;
  for (const auto& [m, c] : p.terms()) {
    GroupElement e = GroupElement::zero(group.dimension);
    for (const auto& [i, q] : m.factors()) e += scale(q, weights[i]);
    add_term(terms, e, c);
  }
  return GenSeries(group, std::move(terms));
}

GenSeries series_from_poly(const Polynomial& p, const ValuationSpec& nu) {
  if (!(p.context() == nu.context())) throw Error(kModule, ErrorCode::ContextMismatch, "polynomial context");
  return series_from_poly(p, nu.weights());
}

GenSeries series_add(const GenSeries& s, const GenSeries& t) {
  require_same_group(s, t);
  GenSeries out(s.group_);
  out.terms_ = s.terms_;
  for (const auto& [e, c] : t.terms_) add_term(out.terms_, e, c);
  auto prec = [](const GenSeries& x) -> std::optional<GroupElement> {
    return x.truncation_ ? x.truncation_->precision : std::nullopt;
  };
  out.truncation_ = merge_markers(s.truncation_, t.truncation_, min_opt(prec(s), prec(t)));
  return out;
}

GenSeries series_neg(const GenSeries& s) {
  GenSeries::Support terms;
  for (const auto& [e, c] : s.terms()) terms.emplace(e, -c);
  return GenSeries(s.group(), std::move(terms), s.truncation());
}

GenSeries series_sub(const GenSeries& s, const GenSeries& t) { return series_add(s, series_neg(t)); }

GenSeries series_mul(const GenSeries& s, const GenSeries& t) {
  require_same_group(s, t);
  GenSeries out(s.group_);
  for (const auto& [e1, c1] : s.terms_)
    for (const auto& [e2, c2] : t.terms_) add_term(out.terms_, e1 + e2, c1 * c2);
  if (s.truncation_ || t.truncation_) {
    // Unknown terms of s (at >= p_s) times t land at >= p_s + v(t), and symmetrically.
    std::optional<GroupElement> prec;
    bool known = true;
    auto contribution = [&](const GenSeries& a, const GenSeries& b) {
      if (!a.truncation_) return;
      if (!a.truncation_->precision || b.terms_.empty()) {
        if (!b.terms_.empty()) known = false;
        return;
      }
      prec = min_opt(prec, *a.truncation_->precision + b.terms_.begin()->first);
    };
    contribution(s, t);
    contribution(t, s);
    out.truncation_ = merge_markers(s.truncation_, t.truncation_, known ? prec : std::nullopt);
  }
  return out;
}

GroupElement series_value(const GenSeries& s) {
  if (s.is_zero()) throw Error(kModule, ErrorCode::ZeroSeries, "value of the zero series");
  return s.terms().begin()->first;
}

GenSeries series_invert(const GenSeries& s, const InversePolicy& policy) {
  if (s.is_zero()) throw Error(kModule, ErrorCode::ZeroSeries, "inverse of the zero series");
  const OrderedGroupSpec group = s.group();
  const GroupElement v = series_value(s);
  const Rational c = s.terms().begin()->second;
  if (policy.cutoff && policy.cutoff->dim() != group.dimension)
    throw Error(kModule, ErrorCode::GroupMismatch, "cutoff outside the value group");

  // m = s / (c z^v) - 1, all of whose exponents are positive.
  GenSeries::Support m_terms;
  for (const auto& [e, a] : s.terms())
    if (e != v) m_terms.emplace(e - v, a / c);
  if (m_terms.empty() && s.is_exact()) return GenSeries::monomial(group, -v, 1 / c);

  const GroupElement delta = m_terms.empty() ? GroupElement::zero(group.dimension) : m_terms.begin()->first;
  GenSeries::Support neg_m;
  for (const auto& [e, a] : m_terms) neg_m.emplace(e, -a);

  // Result exponents are shifted by -v; the cutoff applies to them.
  auto beyond_cutoff = [&](const GroupElement& e) { return policy.cutoff && (e - v) > *policy.cutoff; };

  GenSeries::Support sum;
  GenSeries::Support power;
  power.emplace(GroupElement::zero(group.dimension), Rational(1));
  sum = power;
  std::optional<GroupElement> bound;  // every term of sum below it is final
  std::optional<GroupElement> limit;  // exponent of the (max_terms + 1)-th final term
  const GroupElement horizon = scale(Rational(static_cast<unsigned long>(policy.max_rounds + 1)), delta);
  for (std::size_t round = 1; round <= policy.max_rounds && !neg_m.empty(); ++round) {
    GenSeries::Support next;
    for (const auto& [e1, c1] : power)
      for (const auto& [e2, c2] : neg_m) {
        GroupElement e = e1 + e2;
        if (beyond_cutoff(e) || !(e < horizon) || (limit && e > *limit)) continue;
        add_term(next, e, c1 * c2);
      }
    power = std::move(next);
    for (const auto& [e, a] : power) add_term(sum, e, a);
    bound = scale(Rational(static_cast<unsigned long>(round + 1)), delta);

    std::size_t exact = 0;
    for (const auto& [e, a] : sum) {
      if (!(e < *bound)) break;
      if (!beyond_cutoff(e) && ++exact == policy.max_terms + 1) limit = e;
    }
    if (exact >= policy.max_terms || beyond_cutoff(*bound) || power.empty()) break;
  }
  if (neg_m.empty()) bound.reset();

  // Emit the exact terms, at most max_terms of them.
  GenSeries::Support out;
  std::optional<GroupElement> precision = bound;
  for (const auto& [e, a] : sum) {
    if (bound && !(e < *bound)) break;
    if (beyond_cutoff(e) || out.size() >= policy.max_terms) {
      precision = min_opt(precision, e);
      break;
    }
    out.emplace(e - v, a / c);
  }
  if (precision) precision = *precision - v;
  // Cap the precision at the input's own precision, shifted to the result.
  if (s.truncation() && s.truncation()->precision) {
    precision = min_opt(precision, *s.truncation()->precision - v - v);
  } else if (s.truncation()) {
    precision.reset();
  }
  return GenSeries(group, std::move(out), Truncation{policy.max_terms, policy.cutoff, precision});
}

SeriesVariableFrame default_frame(std::size_t dim) {
  SeriesVariableFrame f;
  for (std::size_t i = 0; i < dim; ++i) f.names.push_back("z" + std::to_string(i + 1));
  return f;
}

GenSeries formal_partial(const GenSeries& s, const SeriesVariableFrame& frame, std::size_t i) {
  const std::size_t d = s.group().dimension;
  if (frame.dim() != d)
    throw Error(kModule, ErrorCode::FrameMismatch,
                "frame of dimension " + std::to_string(frame.dim()) + " for Q^" + std::to_string(d));
  if (i >= d) throw Error(kModule, ErrorCode::FrameMismatch, "direction " + std::to_string(i) + " out of range");
  const GroupElement ei = GroupElement::unit(d, i);
  GenSeries::Support terms;
  for (const auto& [e, c] : s.terms())
    if (e[i] != 0) terms.emplace(e - ei, c * e[i]);
  std::optional<Truncation> marker = s.truncation();
  if (marker && marker->precision) marker->precision = *marker->precision - ei;
  return GenSeries(s.group(), std::move(terms), std::move(marker));
}

GenSeries series_residue(const GenSeries& s, const CompositionLayout& layout) {
  if (layout.total() != s.group().dimension) throw Error(kModule, ErrorCode::LayoutMismatch, "layout vs group");
  GenSeries::Support terms;
  for (const auto& [e, c] : s.terms()) {
    const GroupElement front = project_quotient(layout, e);
    if (front.is_negative())
      throw Error(kModule, ErrorCode::NotInValuationRing,
                  "term at " + to_string(e) + " has negative front part " + to_string(front));
    if (front.is_zero()) terms.emplace(project_subgroup(layout, e), c);
  }
  std::optional<Truncation> marker = s.truncation();
  if (marker) {
    marker->cutoff.reset();
    if (marker->precision) {
      const GroupElement front = project_quotient(layout, *marker->precision);
      if (front.is_positive())
        marker.reset();  // nothing unknown survives the reduction
      else if (front.is_zero())
        marker->precision = project_subgroup(layout, *marker->precision);
      else
        marker->precision.reset();
    }
  }
  return GenSeries(OrderedGroupSpec{layout.back_dims}, std::move(terms), std::move(marker));
}

GroupElement series_form_value(const GenSeries& f, const std::vector<GroupElement>& basis_values) {
  GroupElement v = series_value(f);
  for (const auto& g : basis_values) {
    if (g.dim() != v.dim()) throw Error(kModule, ErrorCode::GroupMismatch, "basis value outside the value group");
    v += g;
  }
  return v;
}

std::string to_string(const GenSeries& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e) + ": " + to_string(c);
  }
  return out + "]";
}

GenSeries parse_series(std::string_view text, std::optional<std::size_t> dim) {
  auto fail = [&](const std::string& why) {
    return Error(kModule, ErrorCode::SyntaxError, why + " in series literal '" + std::string(text) + "'");
  };
  std::string_view s = text;
  auto trim = [](std::string_view x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.remove_prefix(1);
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.remove_suffix(1);
    return x;
  };
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail("expected [...]");
  s = trim(s.substr(1, s.size() - 2));

  GenSeries::Support terms;
  std::optional<std::size_t> d = dim;
  while (!s.empty()) {
    if (s.front() != '(') throw fail("expected exponent tuple");
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw fail("unclosed exponent tuple");
    GroupElement e = parse_group_element(s.substr(0, close + 1));
    if (d && *d != e.dim())
      throw Error(kModule, ErrorCode::DimensionMismatch, "exponent " + to_string(e) + " outside Q^" + std::to_string(*d));
    d = e.dim();
    s = trim(s.substr(close + 1));
    if (s.empty() || s.front() != ':') throw fail("expected ':'");
    s = trim(s.substr(1));
    const auto comma = s.find(',');
    add_term(terms, e, parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s = trim(s.substr(comma + 1));
    if (s.empty()) throw fail("trailing comma");
  }
  if (!d) throw fail("cannot infer the dimension of an empty series");
  return GenSeries(OrderedGroupSpec{*d}, std::move(terms));
}

}  // namespace valform
