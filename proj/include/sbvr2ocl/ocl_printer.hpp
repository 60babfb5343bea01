#pragma once

#include <string>
#include <vector>

#include "sbvr2ocl/ocl_ast.hpp"

namespace sbvr2ocl {

// Canonical expression text: arrow notation for collection operations, dot
// notation for attributes and single navigation, minimal parentheses under the
// precedence order (tightest first) navigation/calls, not, comparison, and,
// or, implies. Structurally equal expressions print identically.
std::string print_expr(const OclExprPtr& e);

// Two lines: "context <Class>" (with "::op(params)" for pre/post) and
// "<kind> <label>: <expr>". No trailing newline.
std::string print_constraint(const OclConstraint& c);

// Whole-file form: constraints in the given order, separated by one blank
// line, with a final newline.
std::string print_ocl_file(const std::vector<OclConstraint>& constraints);

} // namespace sbvr2ocl
