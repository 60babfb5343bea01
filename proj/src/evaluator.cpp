#include "sbvr2ocl/evaluator.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <variant>

namespace sbvr2ocl {

char to_char(TruthValue3 t) {
    switch (t) {
    case TruthValue3::True: return 't';
    case TruthValue3::False: return 'f';
    case TruthValue3::Undefined: break;
    }
    return 'u';
}

// ---------------------------------------------------------------------------
// SnapshotIndex
// ---------------------------------------------------------------------------

SnapshotIndex::SnapshotIndex(const Snapshot& s, const Vocabulary& v, const ClassModel& m)
    : s_(&s), v_(&v), m_(&m) {
    object_classes_.reserve(s.objects.size());
    for (const auto& o : s.objects)
        object_classes_.push_back(upper_camel_case(v.object_type(o.type).term));
}

std::vector<std::string> SnapshotIndex::extent_of_type(ObjectTypeId t) const {
    std::vector<std::string> out;
    for (const auto& o : s_->objects)
        if (v_->conforms(o.type, t)) out.push_back(o.id);
    return out;
}

std::vector<std::string> SnapshotIndex::extent_of_class(std::string_view klass) const {
    std::vector<std::string> out;
    for (size_t i = 0; i < s_->objects.size(); ++i)
        if (m_->conforms(object_classes_[i], klass)) out.push_back(s_->objects[i].id);
    return out;
}

const std::string& SnapshotIndex::class_of(const std::string& id) const {
    for (size_t i = 0; i < s_->objects.size(); ++i)
        if (s_->objects[i].id == id) return object_classes_[i];
    throw EvalBug{"object id not in snapshot: " + id};
}

const Value* SnapshotIndex::attr_value(const std::string& id, std::string_view attr) const {
    for (const auto& a : s_->attrs)
        if (a.object_id == id && a.attr == attr) return a.value ? &*a.value : nullptr;
    return nullptr;
}

bool SnapshotIndex::has_link(FactTypeId fact, const std::string& subject,
                             const std::string& object) const {
    for (const auto& l : s_->links)
        if (l.fact == fact && l.subject_id == subject && l.object_id == object) return true;
    return false;
}

std::vector<std::string> SnapshotIndex::linked(FactTypeId fact, const std::string& from,
                                               bool forward) const {
    std::vector<std::string> out;
    for (const auto& l : s_->links) {
        if (l.fact != fact) continue;
        if (forward && l.subject_id == from) out.push_back(l.object_id);
        if (!forward && l.object_id == from) out.push_back(l.subject_id);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rule evaluation (two-valued)
// ---------------------------------------------------------------------------

namespace {

using Env = std::vector<std::pair<std::string, std::string>>; // var -> object id

std::optional<std::string> env_lookup(const Env& env, const std::string& var) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == var) return it->second;
    return std::nullopt;
}

class SbvrEval {
public:
    explicit SbvrEval(const SnapshotIndex& idx) : idx_(idx), v_(idx.vocabulary()) {}

    bool rule(const SbvrRule& r) {
        env_.clear();
        bool body = form(*r.body);
        bool negative =
            r.modality == Modality::Impossibility || r.modality == Modality::Prohibition;
        return negative ? !body : body;
    }

private:
    bool form(const Formulation& f) {
        if (const auto* q = f.as<Quantification>()) return quant(*q);
        if (const auto* a = f.as<Atomic>()) return atom(*a);
        if (const auto* c = f.as<CharacteristicTest>()) return char_test(*c);
        if (const auto* a = f.as<AttrComparison>()) return attr_cmp(*a);
        if (const auto* n = f.as<NotF>()) return !form(*n->inner);
        if (const auto* a = f.as<AndF>()) return form(*a->left) && form(*a->right);
        if (const auto* o = f.as<OrF>()) return form(*o->left) || form(*o->right);
        if (const auto* i = f.as<ImpliesF>()) return !form(*i->left) || form(*i->right);
        if (const auto* p = f.as<ProjectionF>()) return form(*p->inner);
        throw EvalBug{"unhandled formulation node"};
    }

    bool quant(const Quantification& q) {
        auto domain = idx_.extent_of_type(q.over);
        int64_t hits = 0;
        for (const auto& id : domain) {
            env_.emplace_back(q.var, id);
            if (form(*q.scope)) ++hits;
            env_.pop_back();
        }
        switch (q.kind) {
        case QuantKind::Universal: return hits == static_cast<int64_t>(domain.size());
        case QuantKind::Existential: return hits >= 1;
        case QuantKind::None: return hits == 0;
        case QuantKind::AtLeast: return hits >= *q.n;
        case QuantKind::AtMost: return hits <= *q.n;
        case QuantKind::Exactly: return hits == *q.n;
        case QuantKind::MoreThan: return hits > *q.n;
        }
        return false;
    }

    // A variable denotes its bound object; a named individual has no
    // denotation inside a snapshot, so atoms mentioning one are false.
    std::optional<std::string> denote(const AtomArg& arg) const {
        if (arg.is_var()) return env_lookup(env_, arg.var());
        return std::nullopt;
    }

    bool atom(const Atomic& a) {
        if (a.args.size() != 2) return false;
        auto subject = denote(a.args[0]);
        auto object = denote(a.args[1]);
        if (!subject || !object) return false;
        return idx_.has_link(a.fact, *subject, *object);
    }

    bool char_test(const CharacteristicTest& c) {
        auto id = env_lookup(env_, c.var);
        if (!id) return false;
        const auto& decl = v_.characteristic(c.characteristic);
        const Value* val = idx_.attr_value(*id, decl.adjective);
        return val && val->type() == ValueType::Boolean && val->as_bool();
    }

    bool attr_cmp(const AttrComparison& a) {
        auto id = env_lookup(env_, a.var);
        if (!id) return false;
        const auto& decl = v_.attribute(a.attribute);
        const Value* val = idx_.attr_value(*id, decl.name);
        if (!val || val->type() != a.literal.type()) return false;
        if (a.op == CmpOp::Eq) return *val == a.literal;
        if (val->type() != ValueType::Integer) return false; // ordering needs numbers
        int64_t lhs = val->as_int();
        int64_t rhs = a.literal.as_int();
        switch (a.op) {
        case CmpOp::Eq: return lhs == rhs;
        case CmpOp::Gt: return lhs > rhs;
        case CmpOp::Lt: return lhs < rhs;
        case CmpOp::Ge: return lhs >= rhs;
        case CmpOp::Le: return lhs <= rhs;
        }
        return false;
    }

    const SnapshotIndex& idx_;
    const Vocabulary& v_;
    Env env_;
};

// ---------------------------------------------------------------------------
// Constraint evaluation (three-valued)
// ---------------------------------------------------------------------------

TruthValue3 kleene_not(TruthValue3 a) {
    if (a == TruthValue3::True) return TruthValue3::False;
    if (a == TruthValue3::False) return TruthValue3::True;
    return TruthValue3::Undefined;
}

TruthValue3 kleene_and(TruthValue3 a, TruthValue3 b) {
    if (a == TruthValue3::False || b == TruthValue3::False) return TruthValue3::False;
    if (a == TruthValue3::Undefined || b == TruthValue3::Undefined) return TruthValue3::Undefined;
    return TruthValue3::True;
}

TruthValue3 kleene_or(TruthValue3 a, TruthValue3 b) {
    if (a == TruthValue3::True || b == TruthValue3::True) return TruthValue3::True;
    if (a == TruthValue3::Undefined || b == TruthValue3::Undefined) return TruthValue3::Undefined;
    return TruthValue3::False;
}

TruthValue3 kleene_implies(TruthValue3 a, TruthValue3 b) {
    if (a == TruthValue3::False || b == TruthValue3::True) return TruthValue3::True;
    if (a == TruthValue3::True && b == TruthValue3::False) return TruthValue3::False;
    return TruthValue3::Undefined;
}

// Runtime values. Collections only ever hold object ids: navigations and
// allInstances produce objects, and nothing lifts primitives into collections.
struct OclValue {
    enum class Kind { Undefined, Bool, Int, Str, Obj, Coll };
    Kind kind = Kind::Undefined;
    bool b = false;
    int64_t i = 0;
    std::string s; // Str text or Obj id
    std::vector<std::string> coll;

    static OclValue undefined() { return {}; }
    static OclValue boolean(bool x) {
        OclValue v;
        v.kind = Kind::Bool;
        v.b = x;
        return v;
    }
    static OclValue integer(int64_t x) {
        OclValue v;
        v.kind = Kind::Int;
        v.i = x;
        return v;
    }
    static OclValue str(std::string x) {
        OclValue v;
        v.kind = Kind::Str;
        v.s = std::move(x);
        return v;
    }
    static OclValue object(std::string id) {
        OclValue v;
        v.kind = Kind::Obj;
        v.s = std::move(id);
        return v;
    }
    static OclValue collection(std::vector<std::string> ids) {
        OclValue v;
        v.kind = Kind::Coll;
        v.coll = std::move(ids);
        return v;
    }
    static OclValue of(const Value& val) {
        switch (val.type()) {
        case ValueType::Integer: return integer(val.as_int());
        case ValueType::String: return str(val.as_string());
        case ValueType::Boolean: return boolean(val.as_bool());
        }
        return undefined();
    }
};

class OclEval {
public:
    explicit OclEval(const SnapshotIndex& idx) : idx_(idx) {}

    TruthValue3 constraint(const OclConstraint& c) {
        if (c.kind != ConstraintKind::Inv)
            throw EvalBug{"pre/post constraints need a call event; only inv is evaluatable"};
        bool saw_undef = false;
        for (const auto& id : idx_.extent_of_class(c.context_class)) {
            self_ = id;
            env_.clear();
            TruthValue3 t = truth(*c.body);
            if (t == TruthValue3::False) return TruthValue3::False;
            if (t == TruthValue3::Undefined) saw_undef = true;
        }
        return saw_undef ? TruthValue3::Undefined : TruthValue3::True;
    }

private:
    TruthValue3 truth(const OclExpr& e) {
        OclValue v = value(e);
        if (v.kind == OclValue::Kind::Undefined) return TruthValue3::Undefined;
        if (v.kind != OclValue::Kind::Bool) throw EvalBug{"boolean operand expected"};
        return to_tv3(v.b);
    }

    OclValue value(const OclExpr& e) {
        if (e.as<SelfRef>()) return OclValue::object(self_);
        if (const auto* v = e.as<VarRef>()) {
            auto id = env_lookup(env_, v->name);
            if (!id) throw EvalBug{"unbound variable: " + v->name};
            return OclValue::object(*id);
        }
        if (const auto* l = e.as<LitE>()) return OclValue::of(l->value);
        if (const auto* a = e.as<AttrNav>()) return attr_nav(*a);
        if (const auto* n = e.as<AssocNav>()) return assoc_nav(*n);
        if (const auto* ai = e.as<AllInstances>())
            return OclValue::collection(idx_.extent_of_class(ai->klass));
        if (const auto* it = e.as<IterCall>()) return iterate(*it);
        if (const auto* co = e.as<CollOp>()) return coll_op(*co);
        if (const auto* c = e.as<CmpE>()) return compare(*c);
        if (const auto* b = e.as<BoolE>()) return connective(*b);
        if (const auto* n = e.as<NotE>()) return from_tv3(kleene_not(truth(*n->inner)));
        throw EvalBug{"unhandled expression node"};
    }

    static OclValue from_tv3(TruthValue3 t) {
        if (t == TruthValue3::Undefined) return OclValue::undefined();
        return OclValue::boolean(t == TruthValue3::True);
    }

    OclValue attr_nav(const AttrNav& a) {
        OclValue src = value(*a.src);
        if (src.kind == OclValue::Kind::Undefined) return OclValue::undefined();
        if (src.kind != OclValue::Kind::Obj) throw EvalBug{"attribute navigation needs an object"};
        const Value* val = idx_.attr_value(src.s, a.attr);
        return val ? OclValue::of(*val) : OclValue::undefined();
    }

    // Navigation always yields the linked objects as a collection; declared
    // multiplicities shape static types, not runtime values, so a snapshot
    // that exceeds a bound still evaluates.
    OclValue assoc_nav(const AssocNav& n) {
        OclValue src = value(*n.src);
        if (src.kind == OclValue::Kind::Undefined) return OclValue::undefined();
        if (src.kind != OclValue::Kind::Obj) throw EvalBug{"association navigation needs an object"};
        const AssociationEnd* end = idx_.model().find_end(idx_.class_of(src.s), n.end);
        if (!end) throw EvalBug{"unknown association end: " + n.end};
        return OclValue::collection(idx_.linked(end->fact, src.s, end->forward));
    }

    std::optional<std::vector<std::string>> as_collection(const OclValue& v) {
        if (v.kind == OclValue::Kind::Undefined) return std::nullopt;
        if (v.kind == OclValue::Kind::Coll) return v.coll;
        if (v.kind == OclValue::Kind::Obj) return std::vector<std::string>{v.s};
        throw EvalBug{"collection operand expected"};
    }

    OclValue iterate(const IterCall& it) {
        auto coll = as_collection(value(*it.src));
        if (!coll) return OclValue::undefined();
        bool saw_undef = false;
        std::vector<std::string> selected;
        for (const auto& id : *coll) {
            env_.emplace_back(it.var, id);
            TruthValue3 t = truth(*it.body);
            env_.pop_back();
            switch (it.iter) {
            case IterKind::ForAll:
                if (t == TruthValue3::False) return OclValue::boolean(false);
                if (t == TruthValue3::Undefined) saw_undef = true;
                break;
            case IterKind::Exists:
                if (t == TruthValue3::True) return OclValue::boolean(true);
                if (t == TruthValue3::Undefined) saw_undef = true;
                break;
            case IterKind::Select:
                if (t == TruthValue3::Undefined) saw_undef = true;
                if (t == TruthValue3::True) selected.push_back(id);
                break;
            }
        }
        if (saw_undef) return OclValue::undefined();
        switch (it.iter) {
        case IterKind::ForAll: return OclValue::boolean(true);
        case IterKind::Exists: return OclValue::boolean(false);
        case IterKind::Select: return OclValue::collection(std::move(selected));
        }
        return OclValue::undefined();
    }

    OclValue coll_op(const CollOp& co) {
        auto coll = as_collection(value(*co.src));
        if (!coll) return OclValue::undefined();
        switch (co.op) {
        case CollOpKind::Size: return OclValue::integer(static_cast<int64_t>(coll->size()));
        case CollOpKind::IsEmpty: return OclValue::boolean(coll->empty());
        case CollOpKind::NotEmpty: return OclValue::boolean(!coll->empty());
        }
        return OclValue::undefined();
    }

    OclValue compare(const CmpE& c) {
        OclValue l = value(*c.l);
        OclValue r = value(*c.r);
        if (l.kind == OclValue::Kind::Undefined || r.kind == OclValue::Kind::Undefined)
            return OclValue::undefined();
        if (l.kind != r.kind) throw EvalBug{"comparison operands disagree in kind"};
        if (l.kind == OclValue::Kind::Int) {
            switch (c.op) {
            case CmpKind::Eq: return OclValue::boolean(l.i == r.i);
            case CmpKind::Ne: return OclValue::boolean(l.i != r.i);
            case CmpKind::Lt: return OclValue::boolean(l.i < r.i);
            case CmpKind::Le: return OclValue::boolean(l.i <= r.i);
            case CmpKind::Gt: return OclValue::boolean(l.i > r.i);
            case CmpKind::Ge: return OclValue::boolean(l.i >= r.i);
            }
        }
        bool eq = false;
        switch (l.kind) {
        case OclValue::Kind::Bool: eq = l.b == r.b; break;
        case OclValue::Kind::Str:
        case OclValue::Kind::Obj: eq = l.s == r.s; break;
        case OclValue::Kind::Coll: {
            auto a = l.coll;
            auto b = r.coll;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            eq = a == b;
            break;
        }
        default: throw EvalBug{"unsupported comparison operands"};
        }
        if (c.op == CmpKind::Eq) return OclValue::boolean(eq);
        if (c.op == CmpKind::Ne) return OclValue::boolean(!eq);
        throw EvalBug{"ordering needs integer operands"};
    }

    OclValue connective(const BoolE& b) {
        TruthValue3 l = truth(*b.l);
        TruthValue3 r = truth(*b.r);
        switch (b.op) {
        case BoolKind::And: return from_tv3(kleene_and(l, r));
        case BoolKind::Or: return from_tv3(kleene_or(l, r));
        case BoolKind::Implies: return from_tv3(kleene_implies(l, r));
        }
        return OclValue::undefined();
    }

    const SnapshotIndex& idx_;
    std::string self_;
    Env env_;
};

} // namespace

bool eval_sbvr(const SbvrRule& r, const SnapshotIndex& idx) {
    return SbvrEval(idx).rule(r);
}

bool eval_sbvr(const SbvrRule& r, const Snapshot& s, const Vocabulary& v, const ClassModel& m) {
    SnapshotIndex idx(s, v, m);
    return eval_sbvr(r, idx);
}

TruthValue3 eval_ocl(const OclConstraint& c, const SnapshotIndex& idx) {
    return OclEval(idx).constraint(c);
}

TruthValue3 eval_ocl(const OclConstraint& c, const Snapshot& s, const Vocabulary& v,
                     const ClassModel& m) {
    SnapshotIndex idx(s, v, m);
    return eval_ocl(c, idx);
}

} // namespace sbvr2ocl
