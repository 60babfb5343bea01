#include "sbvr2ocl/compare.hpp"

namespace sbvr2ocl {

CompareResult compare_semantics(const std::vector<std::pair<SbvrRule, OclConstraint>>& pairs,
                                const Vocabulary& v, const ClassModel& m, const EnumOptions& opts,
                                const CompareRow& row) {
    CompareResult result;
    EnumResult enumeration = enumerate_snapshots(v, opts, [&](const Snapshot& snap) {
        ++result.summary.snapshots;
        SnapshotIndex idx(snap, v, m);
        for (const auto& [rule, constraint] : pairs) {
            if (constraint.kind != ConstraintKind::Inv) continue;
            bool sbvr = eval_sbvr(rule, idx);
            TruthValue3 ocl = eval_ocl(constraint, idx);
            ++result.summary.evaluations;
            if (ocl == TruthValue3::Undefined) {
                if (sbvr)
                    ++result.summary.sbvr_true_ocl_undefined;
                else
                    ++result.summary.sbvr_false_ocl_undefined;
            } else if (to_tv3(sbvr) == ocl) {
                ++result.summary.agreements;
            } else {
                ++result.summary.defined_disagreements;
            }
            if (row) row(rule, constraint, snap, sbvr, ocl);
        }
    });
    result.diagnostics = std::move(enumeration.diagnostics);
    return result;
}

} // namespace sbvr2ocl
