#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/enumerate.hpp"
#include "sbvr2ocl/evaluator.hpp"
#include "sbvr2ocl/ocl_ast.hpp"
#include "sbvr2ocl/sbvr_ast.hpp"
#include "sbvr2ocl/snapshot.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct CompareSummary {
    uint64_t snapshots = 0;
    uint64_t evaluations = 0;            // rule/snapshot pairs compared
    uint64_t agreements = 0;             // constraint defined and equal to the rule
    uint64_t defined_disagreements = 0;  // constraint defined and unequal
    uint64_t sbvr_true_ocl_undefined = 0;
    uint64_t sbvr_false_ocl_undefined = 0;

    uint64_t undefined() const { return sbvr_true_ocl_undefined + sbvr_false_ocl_undefined; }
};

struct CompareResult {
    CompareSummary summary;
    std::vector<Diagnostic> diagnostics; // enumeration failures (E_TOO_LARGE)
    bool ok() const { return !any_errors(diagnostics); }
};

// Called for every evaluation when given; rows arrive in enumeration order,
// rules in pair order within one snapshot.
using CompareRow = std::function<void(const SbvrRule&, const OclConstraint&, const Snapshot&,
                                      bool sbvr, TruthValue3 ocl)>;

// Evaluates every (rule, invariant) pair under both semantics on every
// snapshot in the enumeration space and tallies agreement. Pairs whose
// constraint is not an invariant are skipped: pre/post have no snapshot
// semantics. Two-valued truth counts as agreeing with a defined three-valued
// result of the same polarity.
CompareResult compare_semantics(const std::vector<std::pair<SbvrRule, OclConstraint>>& pairs,
                                const Vocabulary& v, const ClassModel& m, const EnumOptions& opts,
                                const CompareRow& row = nullptr);

} // namespace sbvr2ocl
