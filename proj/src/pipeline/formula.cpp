#include "cadprep/formula.hpp"

#include <algorithm>

namespace cadprep {

Formula Formula::make(Kind k, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{k, SignCondition{}, std::move(children)}));
}

Formula Formula::constant(bool value) {
  static const Formula t = make(Kind::True, {});
  static const Formula f = make(Kind::False, {});
  return value ? t : f;
}

Formula Formula::atom(SignCondition c) {
  if (auto d = c.decided()) return constant(*d);
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(c), {}}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.kind() == Kind::False) return constant(false);
    if (p.kind() == Kind::True) continue;
    if (p.kind() == Kind::And) {
      kept.insert(kept.end(), p.children().begin(), p.children().end());
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return constant(true);
  if (kept.size() == 1) return kept.front();
  return make(Kind::And, std::move(kept));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.kind() == Kind::True) return constant(true);
    if (p.kind() == Kind::False) continue;
    if (p.kind() == Kind::Or) {
      kept.insert(kept.end(), p.children().begin(), p.children().end());
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return constant(false);
  if (kept.size() == 1) return kept.front();
  return make(Kind::Or, std::move(kept));
}

Formula Formula::negation(const Formula& f) {
  if (f.kind() == Kind::True) return constant(false);
  if (f.kind() == Kind::False) return constant(true);
  if (f.kind() == Kind::Not) return f.children().front();
  return make(Kind::Not, {f});
}

bool Formula::evaluate(const std::function<int(const Polynomial&)>& sign_of) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return holds(condition().rel, sign_of(condition().poly));
    case Kind::And:
      return std::all_of(children().begin(), children().end(), [&](const Formula& c) { return c.evaluate(sign_of); });
    case Kind::Or:
      return std::any_of(children().begin(), children().end(), [&](const Formula& c) { return c.evaluate(sign_of); });
    case Kind::Not: return !children().front().evaluate(sign_of);
  }
  return false;
}

std::vector<SignCondition> Formula::atoms() const {
  std::vector<SignCondition> out;
  if (kind() == Kind::Atom) out.push_back(condition());
  for (const auto& c : children()) {
    auto sub = c.atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<Polynomial> Formula::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& a : atoms())
    if (std::find(out.begin(), out.end(), a.poly) == out.end()) out.push_back(a.poly);
  return out;
}

Formula Formula::map(const std::function<Polynomial(const Polynomial&)>& fn) const {
  std::vector<Formula> kids;
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: return atom(SignCondition{fn(condition().poly), condition().rel});
    case Kind::Not: return negation(children().front().map(fn));
    case Kind::And:
    case Kind::Or:
      for (const auto& c : children()) kids.push_back(c.map(fn));
      return kind() == Kind::And ? conjunction(std::move(kids)) : disjunction(std::move(kids));
  }
  return *this;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return condition().to_string();
    case Kind::Not: return "not (" + children().front().to_string() + ")";
    case Kind::And:
    case Kind::Or: {
      std::string s;
      for (const auto& c : children()) {
        if (!s.empty()) s += kind() == Kind::And ? " and " : " or ";
        bool wrap = c.kind() == Kind::And || c.kind() == Kind::Or;
        s += wrap ? "(" + c.to_string() + ")" : c.to_string();
      }
      return s;
    }
  }
  return "";
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.condition() == b.condition();
  return a.children() == b.children();
}

}  // namespace cadprep
