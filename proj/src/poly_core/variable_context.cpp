#include <algorithm>
#include <cctype>
#include <set>

#include "cadprep/errors.hpp"
#include "cadprep/polynomial.hpp"

namespace cadprep {

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

ContextPtr VariableContext::create(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_valid_variable_name(n)) throw InvalidArgument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
  return ContextPtr(new VariableContext(std::move(names)));
}

const std::string& VariableContext::name(Variable v) const {
  if (v.index >= names_.size()) throw ContextMismatch("variable index " + std::to_string(v.index) + " outside context");
  return names_[v.index];
}

std::optional<Variable> VariableContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Variable{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Variable VariableContext::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ContextMismatch("unknown variable '" + std::string(name) + "'");
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("polynomials belong to different variable contexts");
}

void require_variable(const ContextPtr& ctx, Variable v) {
  if (!ctx || v.index >= ctx->size())
    throw ContextMismatch("variable index " + std::to_string(v.index) + " outside context");
}

}  // namespace cadprep
