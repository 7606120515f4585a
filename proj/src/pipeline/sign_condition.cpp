#include "cadprep/sign_condition.hpp"

namespace cadprep {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  if (text == "=" || text == "==") return Relation::Eq;
  if (text == "!=") return Relation::Ne;
  if (text == "<") return Relation::Lt;
  if (text == ">") return Relation::Gt;
  if (text == "<=") return Relation::Le;
  if (text == ">=") return Relation::Ge;
  return std::nullopt;
}

bool holds(Relation rel, int sign) {
  switch (rel) {
    case Relation::Eq: return sign == 0;
    case Relation::Ne: return sign != 0;
    case Relation::Lt: return sign < 0;
    case Relation::Gt: return sign > 0;
    case Relation::Le: return sign <= 0;
    case Relation::Ge: return sign >= 0;
  }
  return false;
}

std::optional<bool> SignCondition::decided() const {
  if (!poly.is_constant()) return std::nullopt;
  return holds(rel, sign(poly.constant_coefficient()));
}

std::string SignCondition::to_string() const {
  return poly.to_string() + " " + std::string(cadprep::to_string(rel)) + " 0";
}

}  // namespace cadprep
