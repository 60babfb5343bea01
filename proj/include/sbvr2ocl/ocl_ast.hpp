#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sbvr2ocl/value.hpp"

namespace sbvr2ocl {

class OclExpr;
using OclExprPtr = std::shared_ptr<const OclExpr>;

enum class IterKind { ForAll, Exists, Select };
enum class CollOpKind { Size, IsEmpty, NotEmpty };
enum class CmpKind { Eq, Ne, Lt, Le, Gt, Ge };
enum class BoolKind { And, Or, Implies };
enum class ConstraintKind { Inv, Pre, Post };

struct SelfRef {};
struct VarRef { std::string name; };
struct AttrNav { OclExprPtr src; std::string attr; };
struct AssocNav { OclExprPtr src; std::string end; };
struct AllInstances { std::string klass; };
struct IterCall { OclExprPtr src; IterKind iter; std::string var; OclExprPtr body; };
struct CollOp { OclExprPtr src; CollOpKind op; };
struct CmpE { CmpKind op; OclExprPtr l, r; };
struct BoolE { BoolKind op; OclExprPtr l, r; };
struct NotE { OclExprPtr inner; };
struct LitE { Value value; };

class OclExpr {
public:
    using Node = std::variant<SelfRef, VarRef, AttrNav, AssocNav, AllInstances, IterCall, CollOp,
                              CmpE, BoolE, NotE, LitE>;
    Node node;

    explicit OclExpr(Node n) : node(std::move(n)) {}

    template <class T> const T* as() const { return std::get_if<T>(&node); }
};

template <class T>
OclExprPtr make_expr(T node) {
    return std::make_shared<const OclExpr>(OclExpr::Node{std::move(node)});
}

inline OclExprPtr o_self() { return make_expr(SelfRef{}); }
inline OclExprPtr o_var(std::string name) { return make_expr(VarRef{std::move(name)}); }
inline OclExprPtr o_attr(OclExprPtr src, std::string attr) {
    return make_expr(AttrNav{std::move(src), std::move(attr)});
}
inline OclExprPtr o_nav(OclExprPtr src, std::string end) {
    return make_expr(AssocNav{std::move(src), std::move(end)});
}
inline OclExprPtr o_all_instances(std::string klass) {
    return make_expr(AllInstances{std::move(klass)});
}
inline OclExprPtr o_iter(OclExprPtr src, IterKind iter, std::string var, OclExprPtr body) {
    return make_expr(IterCall{std::move(src), iter, std::move(var), std::move(body)});
}
inline OclExprPtr o_collop(OclExprPtr src, CollOpKind op) {
    return make_expr(CollOp{std::move(src), op});
}
inline OclExprPtr o_cmp(CmpKind op, OclExprPtr l, OclExprPtr r) {
    return make_expr(CmpE{op, std::move(l), std::move(r)});
}
inline OclExprPtr o_bool(BoolKind op, OclExprPtr l, OclExprPtr r) {
    return make_expr(BoolE{op, std::move(l), std::move(r)});
}
inline OclExprPtr o_not(OclExprPtr inner) { return make_expr(NotE{std::move(inner)}); }
inline OclExprPtr o_lit(Value v) { return make_expr(LitE{std::move(v)}); }
inline OclExprPtr o_int(int64_t n) { return o_lit(Value::integer(n)); }
inline OclExprPtr o_true() { return o_lit(Value::boolean(true)); }

struct OperationSig {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params; // (name, class name)
};

struct OclConstraint {
    std::string context_class;
    std::optional<OperationSig> operation; // present iff kind is pre or post
    ConstraintKind kind = ConstraintKind::Inv;
    std::string label; // rule_<index>
    OclExprPtr body;
};

// ---------------------------------------------------------------------------
// Types. Sequence and OrderedSet deliberately do not exist here: no
// constructor can produce them, which the test suite asserts by enumeration.
// ---------------------------------------------------------------------------

class OclType {
public:
    enum class Kind { Integer, String, Boolean, Class, Set, Bag };

    static OclType integer() { return OclType(Kind::Integer); }
    static OclType string() { return OclType(Kind::String); }
    static OclType boolean() { return OclType(Kind::Boolean); }
    static OclType klass(std::string name) {
        OclType t(Kind::Class);
        t.class_name_ = std::move(name);
        return t;
    }
    static OclType set_of(OclType elem) {
        OclType t(Kind::Set);
        t.elem_ = std::make_shared<OclType>(std::move(elem));
        return t;
    }
    static OclType bag_of(OclType elem) {
        OclType t(Kind::Bag);
        t.elem_ = std::make_shared<OclType>(std::move(elem));
        return t;
    }
    static OclType of_value_type(ValueType v) {
        switch (v) {
        case ValueType::Integer: return integer();
        case ValueType::String: return string();
        case ValueType::Boolean: return boolean();
        }
        return integer();
    }

    Kind kind() const { return kind_; }
    bool is_collection() const { return kind_ == Kind::Set || kind_ == Kind::Bag; }
    bool is_boolean() const { return kind_ == Kind::Boolean; }
    const std::string& class_name() const { return class_name_; }
    const OclType& elem() const { return *elem_; }

    friend bool operator==(const OclType& a, const OclType& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Class) return a.class_name_ == b.class_name_;
        if (a.is_collection()) return *a.elem_ == *b.elem_;
        return true;
    }

    std::string to_string() const;

private:
    explicit OclType(Kind k) : kind_(k) {}
    Kind kind_;
    std::string class_name_;
    std::shared_ptr<OclType> elem_;
};

} // namespace sbvr2ocl
