#include "sbvr2ocl/typecheck.hpp"

namespace sbvr2ocl {

std::string OclType::to_string() const {
    switch (kind_) {
    case Kind::Integer: return "Integer";
    case Kind::String: return "String";
    case Kind::Boolean: return "Boolean";
    case Kind::Class: return class_name_;
    case Kind::Set: return "Set(" + elem_->to_string() + ")";
    case Kind::Bag: return "Bag(" + elem_->to_string() + ")";
    }
    return "?";
}

namespace {

class Checker {
public:
    Checker(const ClassModel& m) : m_(m) {}

    std::optional<OclType> check(const OclExprPtr& e, TypeEnv& env, const std::string& path) {
        if (!e) {
            report("E_TYPE_MISMATCH", "missing expression", path);
            return std::nullopt;
        }
        if (e->as<SelfRef>()) return lookup(env, "self", path, "'self' is not bound here");
        if (const auto* v = e->as<VarRef>())
            return lookup(env, v->name, path, "unknown variable '" + v->name + "'");
        if (const auto* lit = e->as<LitE>()) return OclType::of_value_type(lit->value.type());
        if (const auto* a = e->as<AttrNav>()) return check_attr_nav(*a, env, path);
        if (const auto* n = e->as<AssocNav>()) return check_assoc_nav(*n, env, path);
        if (const auto* ai = e->as<AllInstances>()) return check_all_instances(*ai, path);
        if (const auto* it = e->as<IterCall>()) return check_iter(*it, env, path);
        if (const auto* c = e->as<CollOp>()) return check_collop(*c, env, path);
        if (const auto* cmp = e->as<CmpE>()) return check_cmp(*cmp, env, path);
        if (const auto* b = e->as<BoolE>()) return check_bool(*b, env, path);
        if (const auto* nt = e->as<NotE>()) return check_not(*nt, env, path);
        report("E_TYPE_MISMATCH", "unrecognized expression node", path);
        return std::nullopt;
    }

    std::vector<TypeDiagnostic> take_diagnostics() { return std::move(diags_); }

private:
    const ClassModel& m_;
    std::vector<TypeDiagnostic> diags_;

    void report(std::string code, std::string message, const std::string& path) {
        diags_.push_back({std::move(code), std::move(message), path});
    }

    std::optional<OclType> lookup(const TypeEnv& env, const std::string& name,
                                  const std::string& path, std::string missing_msg) {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == name) return it->second;
        report("E_UNKNOWN_MEMBER", std::move(missing_msg), path);
        return std::nullopt;
    }

    const UmlClass* class_named(const OclType& t, const std::string& what,
                                const std::string& path) {
        if (t.kind() != OclType::Kind::Class) {
            report("E_TYPE_MISMATCH", what + " requires an object, found " + t.to_string(), path);
            return nullptr;
        }
        const UmlClass* c = m_.find_class(t.class_name());
        if (!c) report("E_UNKNOWN_MEMBER", "unknown class '" + t.class_name() + "'", path);
        return c;
    }

    std::optional<OclType> check_attr_nav(const AttrNav& a, TypeEnv& env,
                                          const std::string& path) {
        auto src = check(a.src, env, path + ".src");
        if (!src) return std::nullopt;
        const UmlClass* c = class_named(*src, "attribute navigation", path);
        if (!c) return std::nullopt;
        const UmlAttribute* attr = m_.find_attribute(c->name, a.attr);
        if (!attr) {
            report("E_UNKNOWN_MEMBER",
                   "class '" + c->name + "' has no attribute '" + a.attr + "'", path);
            return std::nullopt;
        }
        return OclType::of_value_type(attr->type);
    }

    std::optional<OclType> check_assoc_nav(const AssocNav& n, TypeEnv& env,
                                           const std::string& path) {
        auto src = check(n.src, env, path + ".src");
        if (!src) return std::nullopt;
        const UmlClass* c = class_named(*src, "association navigation", path);
        if (!c) return std::nullopt;
        const AssociationEnd* end = m_.find_end(c->name, n.end);
        if (!end) {
            report("E_UNKNOWN_MEMBER",
                   "class '" + c->name + "' has no association end '" + n.end + "'", path);
            return std::nullopt;
        }
        OclType target = OclType::klass(end->target);
        if (end->bounds.high && *end->bounds.high == 1) return target;
        if (end->unique) return OclType::set_of(std::move(target));
        return OclType::bag_of(std::move(target));
    }

    std::optional<OclType> check_all_instances(const AllInstances& ai, const std::string& path) {
        if (!m_.find_class(ai.klass)) {
            report("E_UNKNOWN_MEMBER", "unknown class '" + ai.klass + "'", path);
            return std::nullopt;
        }
        return OclType::set_of(OclType::klass(ai.klass));
    }

    // Class-typed scalars act as one-element sets in collection context;
    // primitive scalars do not.
    std::optional<OclType> as_collection(const OclType& t, const std::string& path) {
        if (t.is_collection()) return t;
        if (t.kind() == OclType::Kind::Class) return OclType::set_of(t);
        report("E_NOT_A_COLLECTION",
               "collection operation applied to " + t.to_string(), path);
        return std::nullopt;
    }

    std::optional<OclType> check_iter(const IterCall& it, TypeEnv& env,
                                      const std::string& path) {
        auto src = check(it.src, env, path + ".src");
        if (!src) return std::nullopt;
        auto coll = as_collection(*src, path + ".src");
        if (!coll) return std::nullopt;
        env.emplace_back(it.var, coll->elem());
        auto body = check(it.body, env, path + ".body");
        env.pop_back();
        if (!body) return std::nullopt;
        if (!body->is_boolean()) {
            report("E_NOT_BOOLEAN",
                   "iterator body must be Boolean, found " + body->to_string(), path + ".body");
            return std::nullopt;
        }
        if (it.iter == IterKind::Select) return coll;
        return OclType::boolean();
    }

    std::optional<OclType> check_collop(const CollOp& c, TypeEnv& env, const std::string& path) {
        auto src = check(c.src, env, path + ".src");
        if (!src) return std::nullopt;
        auto coll = as_collection(*src, path + ".src");
        if (!coll) return std::nullopt;
        if (c.op == CollOpKind::Size) return OclType::integer();
        return OclType::boolean();
    }

    bool conforms(const OclType& a, const OclType& b) {
        if (a == b) return true;
        if (a.kind() == OclType::Kind::Class && b.kind() == OclType::Kind::Class)
            return m_.conforms(a.class_name(), b.class_name());
        if (a.kind() == b.kind() && a.is_collection()) return conforms(a.elem(), b.elem());
        return false;
    }

    std::optional<OclType> check_cmp(const CmpE& cmp, TypeEnv& env, const std::string& path) {
        auto l = check(cmp.l, env, path + ".l");
        auto r = check(cmp.r, env, path + ".r");
        if (!l || !r) return std::nullopt;
        if (cmp.op == CmpKind::Eq || cmp.op == CmpKind::Ne) {
            if (!conforms(*l, *r) && !conforms(*r, *l)) {
                report("E_TYPE_MISMATCH",
                       "cannot compare " + l->to_string() + " with " + r->to_string(), path);
                return std::nullopt;
            }
            return OclType::boolean();
        }
        if (l->kind() != OclType::Kind::Integer || r->kind() != OclType::Kind::Integer) {
            report("E_TYPE_MISMATCH",
                   "ordered comparison requires Integer operands, found " + l->to_string() +
                       " and " + r->to_string(),
                   path);
            return std::nullopt;
        }
        return OclType::boolean();
    }

    std::optional<OclType> check_bool(const BoolE& b, TypeEnv& env, const std::string& path) {
        auto l = check(b.l, env, path + ".l");
        auto r = check(b.r, env, path + ".r");
        bool ok = true;
        if (l && !l->is_boolean()) {
            report("E_NOT_BOOLEAN", "operand must be Boolean, found " + l->to_string(),
                   path + ".l");
            ok = false;
        }
        if (r && !r->is_boolean()) {
            report("E_NOT_BOOLEAN", "operand must be Boolean, found " + r->to_string(),
                   path + ".r");
            ok = false;
        }
        if (!l || !r || !ok) return std::nullopt;
        return OclType::boolean();
    }

    std::optional<OclType> check_not(const NotE& n, TypeEnv& env, const std::string& path) {
        auto inner = check(n.inner, env, path + ".inner");
        if (!inner) return std::nullopt;
        if (!inner->is_boolean()) {
            report("E_NOT_BOOLEAN", "'not' requires a Boolean operand, found " +
                                        inner->to_string(),
                   path + ".inner");
            return std::nullopt;
        }
        return OclType::boolean();
    }
};

} // namespace

TypeResult expr_type(const OclExprPtr& e, const TypeEnv& env, const ClassModel& m) {
    Checker checker(m);
    TypeEnv mutable_env = env;
    auto t = checker.check(e, mutable_env, "body");
    TypeResult result;
    result.diagnostics = checker.take_diagnostics();
    if (result.diagnostics.empty()) result.type = t;
    return result;
}

TypeResult typecheck(const OclConstraint& c, const ClassModel& m) {
    TypeEnv env;
    if (!m.find_class(c.context_class)) {
        TypeResult result;
        result.diagnostics.push_back(
            {"E_UNKNOWN_MEMBER", "unknown context class '" + c.context_class + "'", "context"});
        return result;
    }
    env.emplace_back("self", OclType::klass(c.context_class));
    if (c.operation) {
        for (const auto& [pname, pclass] : c.operation->params)
            env.emplace_back(pname, OclType::klass(pclass));
    }
    TypeResult result = expr_type(c.body, env, m);
    if (result.type && !result.type->is_boolean()) {
        result.diagnostics.push_back({"E_NOT_BOOLEAN", "constraint body must be Boolean, found " +
                                                           result.type->to_string(),
                                      "body"});
        result.type.reset();
    }
    return result;
}

} // namespace sbvr2ocl
