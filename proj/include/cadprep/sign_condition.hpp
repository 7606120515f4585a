#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cadprep/polynomial.hpp"

namespace cadprep {

enum class Relation { Eq, Ne, Lt, Gt, Le, Ge };

std::string_view to_string(Relation r);
/// Accepts "=", "==", "!=", "<", ">", "<=", ">=".
std::optional<Relation> parse_relation(std::string_view text);
/// Whether a value of the given sign satisfies `rel 0`.
bool holds(Relation rel, int sign);

/** `poly rel 0`. */
struct SignCondition {
  Polynomial poly;
  Relation rel = Relation::Eq;

  /// Truth value when poly is constant, otherwise nullopt.
  std::optional<bool> decided() const;
  std::string to_string() const;

  friend bool operator==(const SignCondition&, const SignCondition&) = default;
};

}  // namespace cadprep
