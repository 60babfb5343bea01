#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct UmlAttribute {
    std::string name;
    ValueType type = ValueType::Integer;
    bool from_characteristic = false;
};

struct UmlParameter {
    std::string name;
    std::string klass;
};

struct UmlOperation {
    std::string name;
    std::vector<UmlParameter> params;
    FactTypeId fact;
};

// One navigable association end, attached to the class it is navigated FROM.
struct AssociationEnd {
    std::string role;
    std::string target; // class reached by navigating this end
    Bounds bounds;
    bool unique = true;
    FactTypeId fact;
    bool forward = true; // true: subject->object direction of the fact type
};

struct Association {
    FactTypeId fact;
    std::string source; // class of the fact's subject
    std::string target; // class of the fact's object
    AssociationEnd forward_end; // attached to source
    AssociationEnd reverse_end; // attached to target
    bool composite = false;
};

struct UmlClass {
    std::string name;
    ObjectTypeId term;
    std::optional<std::string> parent;
    std::vector<UmlAttribute> attributes;
    std::vector<UmlOperation> operations;
    std::vector<AssociationEnd> ends;
};

class ClassModel {
public:
    std::vector<UmlClass> classes;
    std::vector<Association> associations;

    const UmlClass* find_class(std::string_view name) const;

    // Member lookups that follow generalization upward.
    const UmlAttribute* find_attribute(std::string_view klass, std::string_view name) const;
    const AssociationEnd* find_end(std::string_view klass, std::string_view role) const;
    const UmlOperation* find_operation(std::string_view klass, std::string_view name) const;

    // True when sub == super or sub transitively specializes super.
    bool conforms(std::string_view sub, std::string_view super) const;

    const Association* association_for(FactTypeId fact) const;
    std::optional<std::string> class_of_term(ObjectTypeId term) const;
};

// "savings_account" -> "SavingsAccount".
std::string upper_camel_case(std::string_view term);

// Builds the UML-style class model: classes from terms, associations from
// associative/partitive fact types, generalizations from categorizations,
// operations from action fact types, Boolean attributes from characteristics.
// Reports E_NAME_CLASH when two derived members of a class (own or inherited)
// would share a name after role disambiguation.
LoadResult<ClassModel> derive_class_model(const Vocabulary& v);

// Stable text rendering used for structural comparison in tests.
std::string dump_class_model(const ClassModel& m);

} // namespace sbvr2ocl
