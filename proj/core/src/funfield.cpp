#include "valform/funfield.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "valform/errors.hpp"

namespace valform {

namespace {

constexpr const char* kModule = "funfield";

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void require_same_context(const VariableContext& a, const VariableContext& b) {
  if (!(a == b)) throw Error(kModule, ErrorCode::ContextMismatch, "operands live in different variable contexts");
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableContext

VariableContext::VariableContext() : names_(std::make_shared<const std::vector<std::string>>()) {}

VariableContext::VariableContext(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw Error(kModule, ErrorCode::SyntaxError, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error(kModule, ErrorCode::InvalidArgument, "duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(kModule, ErrorCode::UnknownVariable, "'" + std::string(name) + "'");
}

bool operator==(const VariableContext& a, const VariableContext& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t index, const Rational& exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(index, exponent);
  return m;
}

Rational Monomial::exponent(std::size_t index) const {
  for (const auto& [i, e] : factors_)
    if (i == index) return e;
  return 0;
}

bool Monomial::has_fractional_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return !is_integer(f.second); });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      Rational e = a->second + b->second;
      if (e != 0) out.factors_.emplace_back(a->first, std::move(e));
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(const Rational& e) const {
  Monomial out;
  if (e == 0) return out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.second *= e;
  return out;
}

Monomial Monomial::without(std::span<const std::size_t> indices) const {
  Monomial out;
  for (const auto& f : factors_)
    if (std::find(indices.begin(), indices.end(), f.first) == indices.end()) out.factors_.push_back(f);
  return out;
}

Monomial Monomial::restricted_to(std::span<const std::size_t> indices) const {
  Monomial out;
  for (const auto& f : factors_)
    if (std::find(indices.begin(), indices.end(), f.first) != indices.end()) out.factors_.push_back(f);
  return out;
}

bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  // a precedes b when, at the first variable where they differ, a has the larger exponent.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    std::size_t idx;
    Rational ea = 0, eb = 0;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      idx = fa[i].first;
      ea = fa[i++].second;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      idx = fb[j].first;
      eb = fb[j++].second;
    } else {
      idx = fa[i].first;
      ea = fa[i++].second;
      eb = fb[j++].second;
    }
    (void)idx;
    if (ea != eb) return ea > eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(VariableContext ctx, Terms terms) : ctx_(std::move(ctx)) {
  for (auto& [m, c] : terms)
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::constant(const VariableContext& ctx, const Rational& c) {
  Polynomial p(ctx);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(const VariableContext& ctx, std::size_t index) {
  if (index >= ctx.size()) throw Error(kModule, ErrorCode::UnknownVariable, "index out of range");
  Polynomial p(ctx);
  p.add_term(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::variable(const VariableContext& ctx, std::string_view name) {
  return variable(ctx, ctx.require_index(name));
}

Polynomial Polynomial::term(const VariableContext& ctx, const Monomial& m, const Rational& c) {
  Polynomial p(ctx);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::min_exponent(std::size_t index) const {
  if (terms_.empty()) return 0;
  std::optional<Rational> best;
  for (const auto& [m, c] : terms_) {
    Rational e = m.exponent(index);
    if (!best || e < *best) best = e;
  }
  return *best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(ctx_);
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, a * c);
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial out(ctx_);
  if (c == 0) return out;
  for (const auto& [mm, a] : terms_) out.terms_.emplace(mm * m, a * c);
  return out;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  Polynomial out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_neg(const Polynomial& p) { return -p; }

Polynomial partial(const Polynomial& p, std::size_t index) {
  if (index >= p.context().size()) throw Error(kModule, ErrorCode::UnknownVariable, "index out of range");
  Polynomial out(p.context());
  for (const auto& [m, c] : p.terms()) {
    const Rational e = m.exponent(index);
    if (e == 0) continue;
    out += Polynomial::term(p.context(), m * Monomial::variable(index, -1), c * e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.context(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_context(num_.context(), den_.context());
  if (den_.is_zero()) throw Error(kModule, ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(const VariableContext& ctx, const Rational& c) {
  return RationalFunction(Polynomial::constant(ctx, c));
}

RationalFunction RationalFunction::variable(const VariableContext& ctx, std::size_t index) {
  return RationalFunction(Polynomial::variable(ctx, index));
}

RationalFunction RationalFunction::variable(const VariableContext& ctx, std::string_view name) {
  return RationalFunction(Polynomial::variable(ctx, name));
}

bool RationalFunction::is_polynomial() const { return den_.is_constant(); }

void RationalFunction::normalize() {
  const VariableContext& ctx = num_.context();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(ctx, 1);
    return;
  }
  // A single-term denominator folds into the numerator as a Laurent monomial.
  if (den_.is_single_term()) {
    const auto& [m, c] = *den_.terms().begin();
    num_ = num_.times(m.pow(-1), 1 / c);
    den_ = Polynomial::constant(ctx, 1);
    return;
  }
  // Strip the common monomial content and make the leading denominator coefficient 1.
  Monomial shift;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Rational e = std::min(num_.min_exponent(i), den_.min_exponent(i));
    if (e != 0) shift = shift * Monomial::variable(i, -e);
  }
  const Rational lead = den_.terms().begin()->second;
  if (!shift.is_one() || lead != 1) {
    num_ = num_.times(shift, 1 / lead);
    den_ = den_.times(shift, 1 / lead);
  }
  if (num_ == den_) {
    num_ = Polynomial::constant(ctx, 1);
    den_ = Polynomial::constant(ctx, 1);
  }
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw Error(kModule, ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(const Rational& e) const {
  const VariableContext& ctx = context();
  if (is_integer(e)) {
    if (!e.get_num().fits_slong_p()) throw Error(kModule, ErrorCode::InvalidArgument, "exponent too large");
    const long k = e.get_num().get_si();
    if (k == 0) return constant(ctx, 1);
    const unsigned long mag = static_cast<unsigned long>(k < 0 ? -k : k);
    if (num_.is_single_term() && den_.is_constant()) {
      const auto& [m, c] = *num_.terms().begin();
      auto coeff = rational_power(c / den_.terms().begin()->second, e);
      if (!coeff) throw Error(kModule, ErrorCode::DivisionByZero, "power of zero");
      return RationalFunction(Polynomial::term(ctx, m.pow(e), *coeff));
    }
    RationalFunction r(num_.pow(mag), den_.pow(mag));
    return k < 0 ? r.inverse() : r;
  }
  if (num_.is_zero()) {
    if (e > 0) return *this;
    throw Error(kModule, ErrorCode::DivisionByZero, "negative power of zero");
  }
  if (!num_.is_single_term() || !den_.is_constant())
    throw Error(kModule, ErrorCode::FractionalExponentOnNonMonomial,
                "fractional power " + to_string(e) + " of '" + to_string(*this) + "'");
  const auto& [m, c] = *num_.terms().begin();
  auto coeff = rational_power(c / den_.terms().begin()->second, e);
  if (!coeff)
    throw Error(kModule, ErrorCode::FractionalExponentOnNonMonomial,
                "coefficient of '" + to_string(*this) + "' has no rational power " + to_string(e));
  return RationalFunction(Polynomial::term(ctx, m.pow(e), *coeff));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_context(a.context(), b.context());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (b.den_.is_constant()) {
    const Rational c = b.den_.terms().begin()->second;
    return RationalFunction(a.num_ + (b.num_ * a.den_).scaled(1 / c), a.den_);
  }
  if (a.den_.is_constant()) {
    const Rational c = a.den_.terms().begin()->second;
    return RationalFunction(b.num_ + (a.num_ * b.den_).scaled(1 / c), b.den_);
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_context(a.context(), b.context());
  if (a.is_zero() || b.is_zero()) return RationalFunction(Polynomial(a.context()));
  // Cancel identical cross factors before multiplying out.
  if (a.num_ == b.den_) return RationalFunction(b.num_, a.den_);
  if (a.den_ == b.num_) return RationalFunction(a.num_, b.den_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(kModule, ErrorCode::DivisionByZero, "division by the zero function");
  return a * b.inverse();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!(a.context() == b.context())) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g) { return f + g; }
RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g) { return f * g; }
RationalFunction rf_div(const RationalFunction& f, const RationalFunction& g) { return f / g; }
RationalFunction rf_inv(const RationalFunction& f) { return f.inverse(); }

RationalFunction partial(const RationalFunction& f, std::size_t index) {
  const Polynomial& n = f.numerator();
  const Polynomial& d = f.denominator();
  if (d.is_constant()) return RationalFunction(partial(n, index), d);
  return RationalFunction(partial(n, index) * d - n * partial(d, index), d * d);
}

RationalFunction partial(const RationalFunction& f, std::string_view variable) {
  return partial(f, f.context().require_index(variable));
}

namespace {

// Laplace expansion along rows with memoization over column subsets.
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m, const VariableContext& ctx) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ctx, 1);
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
  // minor(mask): determinant of rows [n - popcount(mask), n) restricted to columns in mask.
  auto minor = [&](auto&& self, std::size_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(ctx, 1);
    if (memo[mask]) return *memo[mask];
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
    Polynomial acc(ctx);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      if (!m[row][c].is_zero()) {
        Polynomial term = m[row][c] * self(self, mask & ~(std::size_t{1} << c));
        if (sign > 0) acc += term; else acc -= term;
      }
      sign = -sign;
    }
    memo[mask] = acc;
    return acc;
  };
  return minor(minor, (std::size_t{1} << n) - 1);
}

}  // namespace

RationalFunction jacobian_det(std::span<const RationalFunction> fs, const VariableContext& ctx) {
  const std::size_t n = ctx.size();
  if (fs.size() != n)
    throw Error(kModule, ErrorCode::SizeMismatch,
                std::to_string(fs.size()) + " functions for " + std::to_string(n) + " variables");
  if (n >= 8 * sizeof(std::size_t) - 1) throw Error(kModule, ErrorCode::SizeMismatch, "too many variables");
  // Row i of the Jacobian is (N_i' D_i - N_i D_i') / D_i^2, so each row has one denominator.
  std::vector<std::vector<Polynomial>> rows(n);
  Polynomial den = Polynomial::constant(ctx, 1);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_context(fs[i].context(), ctx);
    const Polynomial& num = fs[i].numerator();
    const Polynomial& d = fs[i].denominator();
    rows[i].reserve(n);
    if (d.is_constant()) {
      for (std::size_t j = 0; j < n; ++j) rows[i].push_back(partial(num, j));
      den = den * d;
    } else {
      for (std::size_t j = 0; j < n; ++j) rows[i].push_back(partial(num, j) * d - num * partial(d, j));
      den = den * d * d;
    }
  }
  return RationalFunction(poly_determinant(rows, ctx), den);
}

RationalFunction substitute(const RationalFunction& f, const std::map<std::string, RationalFunction>& images,
                            const VariableContext& target) {
  const VariableContext& source = f.context();
  std::vector<const RationalFunction*> by_index(source.size(), nullptr);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = images.find(source.name(i));
    if (it != images.end()) {
      require_same_context(it->second.context(), target);
      by_index[i] = &it->second;
    }
  }
  auto image_of = [&](const Polynomial& p) {
    RationalFunction acc(Polynomial{target});
    for (const auto& [m, c] : p.terms()) {
      RationalFunction term = RationalFunction::constant(target, c);
      for (const auto& [i, e] : m.factors()) {
        if (!by_index[i])
          throw Error(kModule, ErrorCode::MissingImage, "no image for variable '" + source.name(i) + "'");
        term = term * by_index[i]->pow(e);
      }
      acc = acc + term;
    }
    return acc;
  };
  return image_of(f.numerator()) / image_of(f.denominator());
}

Polynomial rebase(const Polynomial& p, const VariableContext& target) {
  const VariableContext& source = p.context();
  if (source == target) return p;
  std::vector<std::size_t> map(source.size());
  std::vector<bool> known(source.size(), false);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (auto j = target.index_of(source.name(i))) {
      map[i] = *j;
      known[i] = true;
    }
  }
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm;
    for (const auto& [i, e] : m.factors()) {
      if (!known[i])
        throw Error(kModule, ErrorCode::ContextMismatch,
                    "variable '" + source.name(i) + "' is not part of the target context");
      mm = mm * Monomial::variable(map[i], e);
    }
    out += Polynomial::term(target, mm, c);
  }
  return out;
}

RationalFunction rebase(const RationalFunction& f, const VariableContext& target) {
  return RationalFunction(rebase(f.numerator(), target), rebase(f.denominator(), target));
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (const auto& [i, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += ctx.name(i);
    if (e == 1) continue;
    if (is_integer(e) && e > 0)
      out += "^" + to_string(e);
    else
      out += "^(" + to_string(e) + ")";
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(m, p.context());
    }
  }
  return out;
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator().is_constant()) {
    const Rational d = f.denominator().terms().begin()->second;
    return to_string(d == 1 ? f.numerator() : f.numerator().scaled(1 / d));
  }
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace valform
