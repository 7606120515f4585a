#include "cadprep/monomial_order.hpp"

#include <algorithm>
#include <cctype>

#include "cadprep/errors.hpp"

namespace cadprep {

MonomialOrder::MonomialOrder(ContextPtr ctx, std::vector<Variable> precedence)
    : ctx_(std::move(ctx)), precedence_(std::move(precedence)) {
  if (!ctx_) throw ContextMismatch("monomial order needs a context");
  if (precedence_.size() != ctx_->size())
    throw InvalidArgument("precedence must list every context variable exactly once");
  rank_.assign(ctx_->size(), ctx_->size());
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    require_variable(ctx_, precedence_[i]);
    if (rank_[precedence_[i].index] != ctx_->size())
      throw InvalidArgument("precedence lists variable '" + ctx_->name(precedence_[i]) + "' twice");
    rank_[precedence_[i].index] = i;
  }
}

MonomialOrder MonomialOrder::context_order(ContextPtr ctx) {
  std::vector<Variable> p;
  for (std::uint32_t i = 0; i < ctx->size(); ++i) p.push_back(Variable{i});
  return MonomialOrder(std::move(ctx), std::move(p));
}

MonomialOrder MonomialOrder::parse(ContextPtr ctx, std::string_view text) {
  std::vector<Variable> p;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) p.push_back(ctx->at(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '>' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return MonomialOrder(std::move(ctx), std::move(p));
}

std::size_t MonomialOrder::rank(Variable v) const {
  require_variable(ctx_, v);
  return rank_[v.index];
}

MonomialOrder MonomialOrder::reversed() const {
  std::vector<Variable> p(precedence_.rbegin(), precedence_.rend());
  return MonomialOrder(ctx_, std::move(p));
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!ctx_ || a.size() != ctx_->size() || b.size() != ctx_->size())
    throw ContextMismatch("monomial outside the order's variable context");
  for (auto v : precedence_) {
    if (a[v.index] != b[v.index]) return a[v.index] < b[v.index] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

std::optional<Variable> MonomialOrder::main_variable(const Polynomial& p) const {
  for (auto v : precedence_)
    if (p.contains(v)) return v;
  return std::nullopt;
}

std::string MonomialOrder::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    if (i) s += " > ";
    s += ctx_->name(precedence_[i]);
  }
  return s;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return same_context(a.ctx_, b.ctx_) && a.precedence_ == b.precedence_;
}

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

std::pair<Monomial, Rational> leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw ZeroPolynomialError("zero polynomial has no leading monomial");
  require_same_context(p.context(), ord.context());
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.monomial, best->monomial) == Ordering::Greater) best = &t;
  return {best->monomial, best->coeff};
}

}  // namespace cadprep
