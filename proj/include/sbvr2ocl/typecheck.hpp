#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/ocl_ast.hpp"

namespace sbvr2ocl {

struct TypeDiagnostic {
    std::string code;    // E_TYPE_MISMATCH, E_UNKNOWN_MEMBER, E_NOT_A_COLLECTION, E_NOT_BOOLEAN
    std::string message;
    std::string location; // path into the expression tree, e.g. "body.l.src"
};

struct TypeResult {
    std::optional<OclType> type; // present iff no diagnostics
    std::vector<TypeDiagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Variable typing environment; innermost binding wins on lookup.
using TypeEnv = std::vector<std::pair<std::string, OclType>>;

// Synthesize the type of an expression. A scalar class-typed source of a
// collection operation or iterator is coerced to a one-element Set; primitive
// sources are not.
TypeResult expr_type(const OclExprPtr& e, const TypeEnv& env, const ClassModel& m);

// Check a whole constraint: the body must be Boolean under `self` (and the
// operation's parameters for pre/post constraints).
TypeResult typecheck(const OclConstraint& c, const ClassModel& m);

} // namespace sbvr2ocl
