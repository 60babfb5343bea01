#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sbvr2ocl/ids.hpp"
#include "sbvr2ocl/value.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

enum class Modality { Necessity, Impossibility, Obligation, Prohibition };
enum class RuleClass { Structural, Operative };
enum class QuantKind { Universal, Existential, AtLeast, AtMost, Exactly, MoreThan, None };
enum class ProjectionKind { Set, Bag, Closed };
enum class CmpOp { Eq, Gt, Lt, Ge, Le };

class Formulation;
using FormPtr = std::shared_ptr<const Formulation>;

struct Quantification {
    QuantKind kind = QuantKind::Universal;
    std::optional<int64_t> n; // present for the counting kinds
    std::string var;
    ObjectTypeId over;
    FormPtr scope;
};

// An atom argument: a bound variable or a named individual.
struct AtomArg {
    std::variant<std::string, IndividualId> v;

    static AtomArg variable(std::string name) { return {std::move(name)}; }
    static AtomArg individual(IndividualId id) { return {id}; }
    bool is_var() const { return v.index() == 0; }
    const std::string& var() const { return std::get<std::string>(v); }
    IndividualId individual_id() const { return std::get<IndividualId>(v); }
};

struct Atomic {
    FactTypeId fact;
    std::vector<AtomArg> args; // one for unary fact types, two otherwise
};

struct CharacteristicTest {
    std::string var;
    CharacteristicId characteristic;
};

struct AttrComparison {
    std::string var;
    AttributeId attribute;
    CmpOp op = CmpOp::Eq;
    Value literal;
};

struct NotF { FormPtr inner; };
struct AndF { FormPtr left, right; };
struct OrF { FormPtr left, right; };
struct ImpliesF { FormPtr left, right; };
struct ProjectionF {
    ProjectionKind kind = ProjectionKind::Set;
    FormPtr inner;
};

class Formulation {
public:
    using Node = std::variant<Quantification, Atomic, CharacteristicTest, AttrComparison, NotF,
                              AndF, OrF, ImpliesF, ProjectionF>;
    Node node;

    explicit Formulation(Node n) : node(std::move(n)) {}

    template <class T> const T* as() const { return std::get_if<T>(&node); }
};

template <class T>
FormPtr make_form(T node) {
    return std::make_shared<const Formulation>(Formulation::Node{std::move(node)});
}

inline FormPtr mk_quant(QuantKind k, std::optional<int64_t> n, std::string var, ObjectTypeId over,
                        FormPtr scope) {
    return make_form(Quantification{k, n, std::move(var), over, std::move(scope)});
}
inline FormPtr mk_forall(std::string var, ObjectTypeId over, FormPtr scope) {
    return mk_quant(QuantKind::Universal, std::nullopt, std::move(var), over, std::move(scope));
}
inline FormPtr mk_exists(std::string var, ObjectTypeId over, FormPtr scope) {
    return mk_quant(QuantKind::Existential, std::nullopt, std::move(var), over, std::move(scope));
}
inline FormPtr mk_atomic(FactTypeId fact, std::vector<AtomArg> args) {
    return make_form(Atomic{fact, std::move(args)});
}
inline FormPtr mk_char_test(std::string var, CharacteristicId c) {
    return make_form(CharacteristicTest{std::move(var), c});
}
inline FormPtr mk_attr_cmp(std::string var, AttributeId a, CmpOp op, Value lit) {
    return make_form(AttrComparison{std::move(var), a, op, std::move(lit)});
}
inline FormPtr mk_not(FormPtr inner) { return make_form(NotF{std::move(inner)}); }
inline FormPtr mk_and(FormPtr l, FormPtr r) { return make_form(AndF{std::move(l), std::move(r)}); }
inline FormPtr mk_or(FormPtr l, FormPtr r) { return make_form(OrF{std::move(l), std::move(r)}); }
inline FormPtr mk_implies(FormPtr l, FormPtr r) {
    return make_form(ImpliesF{std::move(l), std::move(r)});
}
inline FormPtr mk_projection(ProjectionKind k, FormPtr inner) {
    return make_form(ProjectionF{k, std::move(inner)});
}

struct SourceSpan {
    int line = 1;
    int col = 1;
    int length = 0;
};

struct SbvrRule {
    int index = 0; // sentence ordinal, starting at 1
    Modality modality = Modality::Necessity;
    FormPtr body;
    SourceSpan span;
};

// Structural (alethic) vs operative (deontic); depends only on the modality.
RuleClass classify_rule(const SbvrRule& r);

std::string to_string(Modality m);

// A use of a source-language feature the target language cannot express.
struct FeatureViolation {
    int rule_index = 0;
    std::string code; // E_CLOSED_PROJECTION or E_INDIVIDUAL_CONCEPT
    std::string description;
};

std::vector<FeatureViolation> check_supported(const SbvrRule& r);

struct VarSets {
    std::set<std::string> bound;
    std::set<std::string> free;
};

VarSets free_and_bound_vars(const FormPtr& f);

// Deterministic s-expression rendering, e.g.
// "rule 1 necessity (forall x:customer (exists y:account (has x y)))".
std::string dump_rule(const SbvrRule& r, const Vocabulary& v);
std::string dump_formulation(const FormPtr& f, const Vocabulary& v);

} // namespace sbvr2ocl
