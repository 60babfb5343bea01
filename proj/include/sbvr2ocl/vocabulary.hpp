#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbvr2ocl/diag.hpp"
#include "sbvr2ocl/ids.hpp"
#include "sbvr2ocl/value.hpp"

namespace sbvr2ocl {

// A noun concept. term is the singular form, lowercase letters/underscores.
struct ObjectType {
    std::string term;
    std::optional<std::string> plural;

    friend bool operator==(const ObjectType&, const ObjectType&) = default;
};

// A named instance of an object type ("John Doe : customer").
struct IndividualConcept {
    std::string name;
    ObjectTypeId instance_of;

    friend bool operator==(const IndividualConcept&, const IndividualConcept&) = default;
};

enum class FactKind { Associative, Categorization, Partitive, CharacteristicUnary };

struct FactType {
    FactKind kind = FactKind::Associative;
    ObjectTypeId subject;
    std::string verb_phrase;
    std::optional<ObjectTypeId> object; // absent for unary fact types
    bool is_action = false;             // only valid on associative fact types

    friend bool operator==(const FactType&, const FactType&) = default;
};

struct AttributeDecl {
    ObjectTypeId owner;
    std::string name;
    ValueType value_type = ValueType::Integer;

    friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

// A unary property ("customer is gold"); lowers to a Boolean attribute
// named after the adjective in the derived class model.
struct CharacteristicDecl {
    ObjectTypeId owner;
    std::string adjective;

    friend bool operator==(const CharacteristicDecl&, const CharacteristicDecl&) = default;
};

struct Bounds {
    int64_t low = 0;
    std::optional<int64_t> high; // nullopt = unbounded (*)

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Declared cardinalities for an associative fact type. forward constrains
// how many objects one subject is linked to, reverse the other direction.
struct MultiplicityDecl {
    FactTypeId fact;
    Bounds forward;
    Bounds reverse;
    bool forward_unique = true;
    bool reverse_unique = true;

    friend bool operator==(const MultiplicityDecl&, const MultiplicityDecl&) = default;
};

class Vocabulary {
public:
    std::vector<ObjectType> object_types;
    std::vector<IndividualConcept> individuals;
    std::vector<FactType> fact_types;
    std::vector<AttributeDecl> attributes;
    std::vector<CharacteristicDecl> characteristics;
    std::vector<MultiplicityDecl> multiplicities;

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

    const ObjectType& object_type(ObjectTypeId id) const { return object_types[id.index]; }
    const IndividualConcept& individual(IndividualId id) const { return individuals[id.index]; }
    const FactType& fact_type(FactTypeId id) const { return fact_types[id.index]; }
    const AttributeDecl& attribute(AttributeId id) const { return attributes[id.index]; }
    const CharacteristicDecl& characteristic(CharacteristicId id) const {
        return characteristics[id.index];
    }

    // Matches a surface form against singular and plural term spellings.
    std::optional<ObjectTypeId> resolve_term(std::string_view surface) const;

    std::optional<ObjectTypeId> find_term(std::string_view singular) const;
    std::optional<IndividualId> find_individual(std::string_view name) const;
    std::optional<AttributeId> find_attribute_exact(ObjectTypeId owner, std::string_view name) const;

    // Lookups that follow categorization upward from `owner`.
    std::optional<AttributeId> find_attribute(ObjectTypeId owner, std::string_view name) const;
    std::optional<CharacteristicId> find_characteristic(ObjectTypeId owner,
                                                        std::string_view adjective) const;

    // True when child == ancestor or child reaches ancestor through
    // categorization fact types. Cycle-safe.
    bool conforms(ObjectTypeId child, ObjectTypeId ancestor) const;

    // Direct categorization parent, if any.
    std::optional<ObjectTypeId> parent_of(ObjectTypeId t) const;

    // First declared fact type with this verb phrase whose subject accepts
    // `subject` (conformance) and, when given, whose object accepts `object`.
    std::optional<FactTypeId> find_fact(ObjectTypeId subject, std::string_view verb,
                                        std::optional<ObjectTypeId> object) const;

    // True if any binary associative/partitive fact type with this verb
    // phrase accepts `subject`; used for longest-match verb scanning.
    bool verb_opens_fact(ObjectTypeId subject, std::string_view verb) const;

    // Declared multiplicity for a fact type, or the default 0..* unique on
    // both ends when none was declared.
    MultiplicityDecl multiplicity_for(FactTypeId fact) const;

    size_t max_verb_words() const;
};

// Parses `.vocab` text. Directives may reference terms declared later in the
// file; resolution happens after all declarations are collected.
LoadResult<Vocabulary> load_vocabulary(std::string_view source);

// Canonical text form; load_vocabulary(print_vocabulary(v)) == v.
std::string print_vocabulary(const Vocabulary& v);

} // namespace sbvr2ocl
