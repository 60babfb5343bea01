#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/ocl_ast.hpp"
#include "sbvr2ocl/sbvr_ast.hpp"
#include "sbvr2ocl/snapshot.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

enum class TruthValue3 { True, False, Undefined };

char to_char(TruthValue3 t); // 't', 'f', 'u'

inline TruthValue3 to_tv3(bool b) { return b ? TruthValue3::True : TruthValue3::False; }

// Read-only lookup helper over one snapshot, shared by both evaluators.
class SnapshotIndex {
public:
    SnapshotIndex(const Snapshot& s, const Vocabulary& v, const ClassModel& m);

    const Snapshot& snapshot() const { return *s_; }
    const Vocabulary& vocabulary() const { return *v_; }
    const ClassModel& model() const { return *m_; }

    // Objects whose exact type conforms to t / whose class conforms to klass,
    // in declaration order.
    std::vector<std::string> extent_of_type(ObjectTypeId t) const;
    std::vector<std::string> extent_of_class(std::string_view klass) const;

    const std::string& class_of(const std::string& id) const;

    // nullptr when the attribute has no (defined) value for the object.
    const Value* attr_value(const std::string& id, std::string_view attr) const;

    bool has_link(FactTypeId fact, const std::string& subject, const std::string& object) const;

    // Ids linked to `from` through `fact`; forward follows subject->object.
    std::vector<std::string> linked(FactTypeId fact, const std::string& from,
                                    bool forward) const;

private:
    const Snapshot* s_;
    const Vocabulary* v_;
    const ClassModel* m_;
    std::vector<std::string> object_classes_; // parallel to snapshot objects
};

// Thrown only for ill-typed expression trees that bypassed the type checker;
// never reachable from type-checked input.
struct EvalBug {
    std::string message;
};

// Two-valued rule evaluation: total on every snapshot. A missing attribute
// value makes the enclosing comparison or characteristic test false;
// impossibility/prohibition negate the body; quantifier domains include
// instances of subtypes.
bool eval_sbvr(const SbvrRule& r, const SnapshotIndex& idx);
bool eval_sbvr(const SbvrRule& r, const Snapshot& s, const Vocabulary& v, const ClassModel& m);

// Three-valued invariant evaluation: a missing attribute value reads as
// undefined, which propagates through comparisons and collection operations;
// the connectives absorb it per the Kleene tables (false and undefined =
// false, true or undefined = true, undefined implies true = true, false
// implies undefined = true). The invariant aggregates over every instance of
// the context class, subtypes included; an empty extent is true. Only inv
// constraints are evaluatable — pre/post need call events.
TruthValue3 eval_ocl(const OclConstraint& c, const SnapshotIndex& idx);
TruthValue3 eval_ocl(const OclConstraint& c, const Snapshot& s, const Vocabulary& v,
                     const ClassModel& m);

} // namespace sbvr2ocl
