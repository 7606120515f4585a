#include "cadprep/projection.hpp"

#include <algorithm>
#include <deque>

#include "cadprep/errors.hpp"
#include "cadprep/poly_algorithms.hpp"

namespace cadprep {

namespace {

bool share_variable(const Polynomial& a, const Polynomial& b) {
  for (const auto& t : a.variables())
    if (b.contains(t)) return true;
  return false;
}

std::vector<Polynomial> coprime_basis(std::vector<Polynomial> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size() && !changed; ++j) {
        if (!share_variable(w[i], w[j])) continue;
        if (w[i] == w[j]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        Polynomial g = gcd(w[i], w[j]);
        if (g.is_constant()) continue;
        Polynomial a = divide_exact(w[i], g), b = divide_exact(w[j], g);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto* p : {&a, &b, &g})
          if (!p->is_constant()) w.push_back(p->integer_primitive());
        changed = true;
      }
    }
  }
  return w;
}

std::vector<Polynomial> finish(std::vector<Polynomial> w) {
  for (auto& p : w) p = squarefree_part(p);
  w = coprime_basis(std::move(w));
  for (auto& p : w) p = p.integer_primitive();
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

void push_nonconstant(std::vector<Polynomial>& out, const Polynomial& p) {
  if (!p.is_constant()) out.push_back(p);
}

std::vector<Polynomial> reducta(const Polynomial& p, Variable v) {
  std::vector<Polynomial> r;
  auto coeffs = p.coefficients(v);
  while (coeffs.size() >= 2) {
    r.push_back(Polynomial::from_coefficients(p.context(), v, coeffs));
    coeffs.pop_back();
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  return r;
}

void collins_pairs(std::vector<Polynomial>& out, const Polynomial& f, const Polynomial& g, Variable v) {
  unsigned k = std::min(f.degree(v), g.degree(v));
  for (unsigned j = 0; j < k; ++j) push_nonconstant(out, principal_subresultant_coefficient(f, g, v, j));
}

}  // namespace

std::string_view to_string(ProjectionOperator op) {
  return op == ProjectionOperator::McCallum ? "mccallum" : "collins";
}

std::optional<ProjectionOperator> parse_projection_operator(std::string_view text) {
  if (text == "mccallum") return ProjectionOperator::McCallum;
  if (text == "collins") return ProjectionOperator::Collins;
  return std::nullopt;
}

std::vector<Polynomial> prepare_level(std::span<const Polynomial> polys) {
  std::vector<Polynomial> w;
  for (const auto& p : polys)
    if (!p.is_constant()) w.push_back(p.integer_primitive());
  return finish(std::move(w));
}

std::vector<Polynomial> prepare_level(std::span<const Polynomial> polys, const MonomialOrder& ord) {
  std::deque<Polynomial> queue;
  for (const auto& p : polys)
    if (!p.is_constant()) queue.push_back(p.integer_primitive());
  std::vector<Polynomial> w;
  while (!queue.empty()) {
    Polynomial p = std::move(queue.front());
    queue.pop_front();
    Variable v = *ord.main_variable(p);
    Polynomial c = content(p, v);
    if (c.is_constant()) {
      w.push_back(std::move(p));
    } else {
      queue.push_back(c);
      w.push_back(divide_exact(p, c).integer_primitive());
    }
  }
  return finish(std::move(w));
}

std::vector<Polynomial> project_once(std::span<const Polynomial> A0, Variable v, ProjectionOperator op,
                                     const MonomialOrder* ord, const Deadline& deadline) {
  std::vector<Polynomial> A = ord ? prepare_level(A0, *ord) : prepare_level(A0);
  std::vector<Polynomial> out, with_v;
  for (const auto& p : A) {
    if (p.contains(v)) {
      with_v.push_back(p);
    } else {
      out.push_back(p);
    }
  }

  for (std::size_t i = 0; i < with_v.size(); ++i) {
    deadline.check("projection");
    const Polynomial& p = with_v[i];
    for (const auto& c : p.coefficients(v)) push_nonconstant(out, c);
    if (op == ProjectionOperator::McCallum) {
      if (p.degree(v) >= 2) {
        Polynomial d = discriminant(p, v);
        if (d.is_zero()) throw InvalidArgument("discriminant of '" + p.to_string() + "' vanishes identically");
        push_nonconstant(out, d);
      }
    } else {
      for (const auto& r : reducta(p, v)) {
        push_nonconstant(out, r.leading_coefficient(v));
        if (r.degree(v) >= 2) collins_pairs(out, r, r.derivative(v), v);
      }
    }
  }
  for (std::size_t i = 0; i < with_v.size(); ++i) {
    for (std::size_t j = i + 1; j < with_v.size(); ++j) {
      deadline.check("projection");
      if (op == ProjectionOperator::McCallum) {
        Polynomial r = resultant(with_v[i], with_v[j], v);
        if (r.is_zero())
          throw InvalidArgument("resultant of '" + with_v[i].to_string() + "' and '" + with_v[j].to_string() +
                                "' vanishes identically");
        push_nonconstant(out, r);
      } else {
        for (const auto& r1 : reducta(with_v[i], v))
          for (const auto& r2 : reducta(with_v[j], v)) collins_pairs(out, r1, r2, v);
      }
    }
  }
  return ord ? prepare_level(out, *ord) : prepare_level(out);
}

ProjectionSet project_all(std::span<const Polynomial> polys, const MonomialOrder& ord, ProjectionOperator op,
                          const Deadline& deadline) {
  ProjectionSet set{ord, {}};
  std::size_t n = ord.size();
  set.levels.push_back(prepare_level(polys, ord));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    set.levels.push_back(project_once(set.levels.back(), ord.precedence()[k], op, &ord, deadline));
  }
  return set;
}

}  // namespace cadprep
