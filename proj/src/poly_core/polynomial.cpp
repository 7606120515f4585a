#include "cadprep/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "cadprep/errors.hpp"

namespace cadprep {

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

int sign(const Rational& q) { return sgn(q); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// Monomial

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::size_t Monomial::variable_count() const {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](auto e) { return e != 0; }));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coeff;
    if (c != 0) {
      if (out != i) terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists computing a + s*b.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back(b[j]);
      if (subtract) r.back().coeff = -r.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) r.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    r.push_back(b[j]);
    if (subtract) r.back().coeff = -r.back().coeff;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx, const Rational& constant) : ctx_(std::move(ctx)) {
  if (constant != 0) {
    if (!ctx_) throw ContextMismatch("nonzero constant requires a variable context");
    terms_.push_back(Term{Monomial(ctx_->size()), constant});
  }
}

Polynomial Polynomial::variable(ContextPtr ctx, Variable v, std::uint32_t exponent) {
  require_variable(ctx, v);
  Monomial m(ctx->size());
  m[v.index] = exponent;
  return Polynomial(ctx, std::vector<Term>{Term{std::move(m), Rational(1)}});
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational& coeff) {
  if (!ctx || m.size() != ctx->size()) throw ContextMismatch("monomial does not match context");
  if (coeff == 0) return Polynomial(std::move(ctx));
  return Polynomial(std::move(ctx), std::vector<Term>{Term{std::move(m), coeff}});
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (!ctx || t.monomial.size() != ctx->size()) throw ContextMismatch("term does not match context");
  canonicalize(terms);
  return Polynomial(std::move(ctx), std::move(terms));
}

Polynomial Polynomial::from_coefficients(ContextPtr ctx, Variable v, std::span<const Polynomial> coeffs) {
  require_variable(ctx, v);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    require_same_context(ctx, coeffs[i].context());
    for (const auto& t : coeffs[i].terms()) {
      Term nt = t;
      nt.monomial[v.index] += static_cast<std::uint32_t>(i);
      terms.push_back(std::move(nt));
    }
  }
  canonicalize(terms);
  return Polynomial(std::move(ctx), std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::degree(Variable v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[v.index]);
  return d;
}

bool Polynomial::contains(Variable v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[v.index] != 0; });
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vs;
  if (!ctx_) return vs;
  for (std::uint32_t i = 0; i < ctx_->size(); ++i)
    if (contains(Variable{i})) vs.push_back(Variable{i});
  return vs;
}

std::vector<Polynomial> Polynomial::coefficients(Variable v) const {
  require_variable(ctx_, v);
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term nt = t;
    auto e = nt.monomial[v.index];
    nt.monomial[v.index] = 0;
    buckets[e].push_back(std::move(nt));
  }
  // Zeroing one exponent keeps the relative order inside a bucket.
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial(ctx_, std::move(b)));
  return out;
}

Polynomial Polynomial::leading_coefficient(Variable v) const {
  if (is_zero()) return *this;
  return coefficients(v).back();
}

Polynomial Polynomial::operator-() const {
  auto t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  auto t = terms_;
  for (auto& x : t) x.coeff *= c;
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.monomial * m, x.coeff * c});
  // Multiplying by a monomial preserves the lex order.
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ctx_, Rational(1));
  if (!ctx_) {
    if (exponent == 0) throw ContextMismatch("0^0 without context");
    return *this;
  }
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(Variable v) const {
  require_variable(ctx_, v);
  std::vector<Term> t;
  for (const auto& x : terms_) {
    auto e = x.monomial[v.index];
    if (e == 0) continue;
    Term nt{x.monomial, x.coeff * e};
    nt.monomial[v.index] = e - 1;
    t.push_back(std::move(nt));
  }
  canonicalize(t);
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::substitute(const std::map<Variable, Rational>& bindings) const {
  if (bindings.empty() || is_zero()) return *this;
  for (const auto& [v, _] : bindings) require_variable(ctx_, v);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Term nt = x;
    for (const auto& [v, val] : bindings) {
      auto e = nt.monomial[v.index];
      if (e == 0) continue;
      nt.coeff *= cadprep::pow(val, e);
      nt.monomial[v.index] = 0;
    }
    if (nt.coeff != 0) t.push_back(std::move(nt));
  }
  canonicalize(t);
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::substitute(Variable v, const Rational& value) const {
  return substitute(std::map<Variable, Rational>{{v, value}});
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& bindings) const {
  auto r = substitute(bindings);
  if (!r.is_constant()) throw InvalidArgument("evaluate: not every variable is bound");
  return r.constant_coefficient();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / terms_.front().coeff);
}

Rational Polynomial::integer_content() const {
  if (is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::integer_primitive() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / integer_content());
}

Polynomial Polynomial::rename(ContextPtr target, std::span<const Variable> map) const {
  if (!ctx_) return Polynomial(std::move(target));
  if (map.size() != ctx_->size()) throw ContextMismatch("rename: map size differs from context size");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (x.monomial[i] == 0) continue;
      require_variable(target, map[i]);
      m[map[i].index] += x.monomial[i];
    }
    t.push_back(Term{std::move(m), x.coeff});
  }
  canonicalize(t);
  return Polynomial(std::move(target), std::move(t));
}

ContextPtr Polynomial::merged_context(const Polynomial& a, const Polynomial& b) {
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_) return a.ctx_;
  require_same_context(a.ctx_, b.ctx_);
  return a.ctx_;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  auto ctx = Polynomial::merged_context(a, b);
  if (a.is_zero()) return Polynomial(ctx, b.terms_);
  if (b.is_zero()) return Polynomial(ctx, a.terms_);
  return Polynomial(ctx, merge_add(a.terms_, b.terms_, false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  auto ctx = Polynomial::merged_context(a, b);
  return Polynomial(ctx, merge_add(a.terms_, b.terms_, true));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto ctx = Polynomial::merged_context(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(ctx);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
  // Accumulate row by row; each row b*t is already sorted, so a merge suffices.
  const auto& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const auto& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() <= 4) {
    std::vector<Term> acc;
    for (const auto& t : small.terms_) {
      std::vector<Term> row;
      row.reserve(large.terms_.size());
      for (const auto& u : large.terms_) row.push_back(Term{t.monomial * u.monomial, t.coeff * u.coeff});
      acc = acc.empty() ? std::move(row) : merge_add(acc, row, false);
    }
    return Polynomial(ctx, std::move(acc));
  }
  std::vector<Term> all;
  all.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& t : small.terms_)
    for (const auto& u : large.terms_) all.push_back(Term{t.monomial * u.monomial, t.coeff * u.coeff});
  canonicalize(all);
  return Polynomial(ctx, std::move(all));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!same_context(a.ctx_, b.ctx_)) return false;
  return a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].monomial <=> b.terms_[i].monomial; c != 0) return c;
    int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Free functions

std::uint64_t total_degree(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("total degree of the zero polynomial is undefined");
  std::uint64_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::uint64_t sotd(const Polynomial& p) {
  std::uint64_t s = 0;
  for (const auto& t : p.terms()) s += t.monomial.total_degree();
  return s;
}

std::size_t noi(const Polynomial& p) {
  if (p.is_zero() || !p.context()) return 0;
  return p.variables().size();
}

Polynomial derivative(const Polynomial& p, Variable v) { return p.derivative(v); }

Polynomial substitute(const Polynomial& p, const std::map<Variable, Rational>& bindings) {
  return p.substitute(bindings);
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

}  // namespace cadprep
