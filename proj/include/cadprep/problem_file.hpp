#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cadprep/pipeline.hpp"

namespace cadprep {

/**
 * Reads the line-based problem format:
 *
 *   name: spheres
 *   vars: x > y > z
 *   quantifiers: exists x; exists y
 *   eqs:
 *     (x-1)^2 + y^2 + z^2 - 3
 *   constraints:
 *     x^2 + y^2 - 1 < 0 and not (z = 0)
 *     4*a in [1, 7]
 *
 * Constraint lines are conjoined. `p in [lo, hi]` stands for
 * `p - lo >= 0 and p - hi <= 0`; a relation may have any polynomial on its
 * right-hand side. `#` starts a comment.
 */
Problem parse_problem(std::string_view text, std::string id = {});

/// parse_problem on the file contents; the id defaults to the file stem.
Problem load_problem(const std::filesystem::path& path);

/// Text that parse_problem reads back to an equal problem.
std::string format_problem(const Problem& p);

}  // namespace cadprep
