#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/ocl_ast.hpp"
#include "sbvr2ocl/sbvr_ast.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct MapResult {
    std::optional<OclConstraint> constraint; // present iff errors empty
    std::vector<std::pair<std::string, std::string>> warnings; // (code, message)
    std::vector<std::pair<std::string, std::string>> errors;   // (code, message)

    bool ok() const { return errors.empty(); }
};

// Transform one rule into an OCL constraint.
//   - Structural rules become invariants; a positive rule headed by a
//     universal quantification (and a negative rule headed by an existential
//     one) opens the quantification onto `self`; every other head maps through
//     <Class>.allInstances().
//   - Impossibility/prohibition negate the mapped body.
//   - Operative rules over an action fact type become pre ("only if"
//     condition) or post constraints on the derived operation; operative rules
//     without an action verb demote to invariants with W_OPERATIVE_AS_INV.
//   - Inner quantifications navigate the association that links their variable
//     to an enclosing one; atoms whose variables are already both bound become
//     membership tests over the navigation.
MapResult map_rule(const SbvrRule& r, const Vocabulary& v, const ClassModel& m);

} // namespace sbvr2ocl
