#include "sbvr2ocl/mapper.hpp"

#include <set>

namespace sbvr2ocl {

namespace {

struct MapError {
    std::string code;
    std::string message;
};

struct Binding {
    OclExprPtr expr;
    ObjectTypeId type;
};

using Env = std::vector<std::pair<std::string, Binding>>;

const Binding* lookup(const Env& env, const std::string& var) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == var) return &it->second;
    return nullptr;
}

CmpKind cmp_of(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return CmpKind::Eq;
    case CmpOp::Gt: return CmpKind::Gt;
    case CmpOp::Lt: return CmpKind::Lt;
    case CmpOp::Ge: return CmpKind::Ge;
    case CmpOp::Le: return CmpKind::Le;
    }
    return CmpKind::Eq;
}

class Mapper {
public:
    Mapper(const SbvrRule& r, const Vocabulary& v, const ClassModel& m)
        : rule_(r), v_(v), m_(m) {
        VarSets vars = free_and_bound_vars(r.body);
        used_vars_ = vars.bound;
        used_vars_.insert(vars.free.begin(), vars.free.end());
    }

    OclConstraint run() {
        OclConstraint c;
        c.label = "rule_" + std::to_string(rule_.index);
        bool negative =
            rule_.modality == Modality::Impossibility || rule_.modality == Modality::Prohibition;

        if (classify_rule(rule_) == RuleClass::Operative) {
            if (map_action_rule(c, negative)) return c;
            warnings.emplace_back("W_OPERATIVE_AS_INV",
                                  "operative rule involves no action verb; emitted as an "
                                  "invariant");
        }

        c.kind = ConstraintKind::Inv;
        const auto* q = rule_.body->as<Quantification>();
        if (q && !negative && q->kind == QuantKind::Universal) {
            // "each T ..." — the universal becomes the invariant's own
            // iteration over the context class.
            c.context_class = class_of(q->over);
            Env env{{q->var, {o_self(), q->over}}};
            c.body = map_form(q->scope, env);
        } else if (q && negative && q->kind == QuantKind::Existential) {
            // "it is impossible that a T ..." — no instance may satisfy the
            // scope, so the negation opens directly onto self.
            c.context_class = class_of(q->over);
            Env env{{q->var, {o_self(), q->over}}};
            c.body = o_not(map_form(q->scope, env));
        } else {
            const Quantification* leftmost = leftmost_quant(rule_.body);
            if (!leftmost)
                throw MapError{"E_NO_CONTEXT",
                               "no quantification supplies a context class"};
            c.context_class = class_of(leftmost->over);
            Env env;
            OclExprPtr body = map_form(rule_.body, env);
            c.body = negative ? o_not(std::move(body)) : std::move(body);
        }
        return c;
    }

    std::vector<std::pair<std::string, std::string>> warnings;

private:
    const SbvrRule& rule_;
    const Vocabulary& v_;
    const ClassModel& m_;
    std::set<std::string> used_vars_;

    std::string class_of(ObjectTypeId t) const { return upper_camel_case(v_.object_type(t).term); }

    std::string fresh_var() {
        static constexpr const char* kFirst[] = {"x", "y", "z", "w"};
        for (int i = 0;; ++i) {
            std::string name = i < 4 ? kFirst[i] : "v" + std::to_string(i + 1);
            if (used_vars_.insert(name).second) return name;
        }
    }

    const Quantification* leftmost_quant(const FormPtr& f) const {
        if (!f) return nullptr;
        if (const auto* q = f->as<Quantification>()) return q;
        if (const auto* n = f->as<NotF>()) return leftmost_quant(n->inner);
        if (const auto* b = f->as<AndF>()) {
            if (const auto* q = leftmost_quant(b->left)) return q;
            return leftmost_quant(b->right);
        }
        if (const auto* b = f->as<OrF>()) {
            if (const auto* q = leftmost_quant(b->left)) return q;
            return leftmost_quant(b->right);
        }
        if (const auto* b = f->as<ImpliesF>()) {
            if (const auto* q = leftmost_quant(b->left)) return q;
            return leftmost_quant(b->right);
        }
        if (const auto* p = f->as<ProjectionF>()) return leftmost_quant(p->inner);
        return nullptr;
    }

    // ---- operative rules over action verbs -> pre/post ----

    bool map_action_rule(OclConstraint& c, bool negative) {
        const auto* q1 = rule_.body->as<Quantification>();
        if (!q1) return false;
        const auto* q2 = q1->scope->as<Quantification>();
        if (!q2) return false;

        const Atomic* atom = nullptr;
        const FormPtr* condition = nullptr;
        if (const auto* a = q2->scope->as<Atomic>()) {
            atom = a;
        } else if (const auto* imp = q2->scope->as<ImpliesF>()) {
            if (const auto* a = imp->left->as<Atomic>()) {
                atom = a;
                condition = &imp->right;
            }
        }
        if (!atom) return false;
        const FactType& fact = v_.fact_type(atom->fact);
        if (!fact.is_action) return false;
        if (atom->args.size() != 2 || !atom->args[0].is_var() || !atom->args[1].is_var() ||
            atom->args[0].var() != q1->var || atom->args[1].var() != q2->var)
            return false;

        const UmlOperation* op = operation_for(atom->fact);
        if (!op) return false;

        c.context_class = class_of(q1->over);
        c.operation = OperationSig{op->name, {}};
        for (const auto& p : op->params) c.operation->params.emplace_back(p.name, p.klass);

        // The rule may quantify the argument over a narrower type than the
        // operation declares. The constraint then covers only calls whose
        // argument lies in the narrow extent, tested by membership.
        OclExprPtr narrowing;
        if (q2->over != *fact.object) {
            std::string probe = fresh_var();
            narrowing = o_iter(o_all_instances(class_of(q2->over)), IterKind::Exists, probe,
                               o_cmp(CmpKind::Eq, o_var(probe), o_var(op->params.front().name)));
        }

        if (condition) {
            // "... only if C" — C guards the call.
            c.kind = ConstraintKind::Pre;
            Env env{{q1->var, {o_self(), q1->over}},
                    {q2->var, {o_var(op->params.front().name), q2->over}}};
            c.body = map_form(*condition, env);
            if (negative) c.body = o_not(c.body);
            if (narrowing)
                c.body = o_bool(BoolKind::Implies, std::move(narrowing), std::move(c.body));
        } else {
            // A bare obligation states nothing checkable beyond the
            // argument's type; a bare prohibition forbids the call outright.
            c.kind = ConstraintKind::Post;
            if (narrowing)
                c.body = negative ? o_not(std::move(narrowing)) : std::move(narrowing);
            else
                c.body = negative ? o_not(o_true()) : o_true();
        }
        return true;
    }

    const UmlOperation* operation_for(FactTypeId fact) const {
        for (const auto& klass : m_.classes)
            for (const auto& op : klass.operations)
                if (op.fact == fact) return &op;
        return nullptr;
    }

    // ---- formulation mapping ----

    OclExprPtr map_form(const FormPtr& f, Env& env) {
        if (const auto* q = f->as<Quantification>()) return map_quantifier(*q, env);
        if (const auto* a = f->as<Atomic>()) return map_residual_atomic(*a, env);
        if (const auto* ct = f->as<CharacteristicTest>()) {
            const Binding* b = bound(env, ct->var);
            return o_attr(b->expr, v_.characteristic(ct->characteristic).adjective);
        }
        if (const auto* ac = f->as<AttrComparison>()) {
            const Binding* b = bound(env, ac->var);
            return o_cmp(cmp_of(ac->op), o_attr(b->expr, v_.attribute(ac->attribute).name),
                         o_lit(ac->literal));
        }
        if (const auto* n = f->as<NotF>()) return o_not(map_form(n->inner, env));
        if (const auto* b = f->as<AndF>())
            return o_bool(BoolKind::And, map_form(b->left, env), map_form(b->right, env));
        if (const auto* b = f->as<OrF>())
            return o_bool(BoolKind::Or, map_form(b->left, env), map_form(b->right, env));
        if (const auto* b = f->as<ImpliesF>())
            return o_bool(BoolKind::Implies, map_form(b->left, env), map_form(b->right, env));
        if (const auto* p = f->as<ProjectionF>()) {
            if (p->kind == ProjectionKind::Closed)
                throw MapError{"E_CLOSED_PROJECTION",
                               "a closed projection has no counterpart in the target language"};
            return map_form(p->inner, env);
        }
        throw MapError{"E_NO_CONTEXT", "empty formulation"};
    }

    const Binding* bound(const Env& env, const std::string& var) {
        const Binding* b = lookup(env, var);
        if (!b)
            throw MapError{"E_NO_CONTEXT", "variable '" + var + "' is not bound by any "
                                           "quantification"};
        return b;
    }

    // An atom both of whose participants are already bound elsewhere: test
    // membership of the object in the subject's navigation.
    OclExprPtr map_residual_atomic(const Atomic& a, Env& env) {
        if (a.args.size() != 2 || !a.args[0].is_var() || !a.args[1].is_var())
            throw MapError{"E_INDIVIDUAL_CONCEPT",
                           "rule refers to a named individual, which has no counterpart in the "
                           "target language"};
        const Binding* subj = bound(env, a.args[0].var());
        const Binding* obj = bound(env, a.args[1].var());
        const Association* assoc = m_.association_for(a.fact);
        if (!assoc)
            throw MapError{"E_NO_CONTEXT",
                           "fact type '" + v_.fact_type(a.fact).verb_phrase +
                               "' has no association to navigate"};
        std::string probe = fresh_var();
        return o_iter(o_nav(subj->expr, assoc->forward_end.role), IterKind::Exists, probe,
                      o_cmp(CmpKind::Eq, o_var(probe), obj->expr));
    }

    static void flatten_and(const FormPtr& f, std::vector<FormPtr>& out) {
        if (const auto* b = f->as<AndF>()) {
            flatten_and(b->left, out);
            flatten_and(b->right, out);
        } else {
            out.push_back(f);
        }
    }

    static FormPtr rebuild_and(const std::vector<FormPtr>& parts) {
        if (parts.empty()) return nullptr;
        FormPtr acc = parts.front();
        for (size_t i = 1; i < parts.size(); ++i) acc = mk_and(acc, parts[i]);
        return acc;
    }

    // Find, in a conjunction, the atom that links the quantified variable to a
    // variable bound in the environment. Returns the navigation source binding
    // plus the end to navigate, and removes the atom from the parts. The
    // quantified type must be exactly the class the end reaches: quantifying a
    // subtype over a broader navigation would range over the wrong set.
    struct LinkNav {
        OclExprPtr nav;
        FormPtr residue; // nullptr when the link was the whole conjunction
    };

    std::optional<LinkNav> extract_link(const std::vector<FormPtr>& parts,
                                        const std::string& qvar, const std::string& qclass,
                                        const Env& env) {
        for (size_t i = 0; i < parts.size(); ++i) {
            const auto* a = parts[i]->as<Atomic>();
            if (!a || a->args.size() != 2 || !a->args[0].is_var() || !a->args[1].is_var())
                continue;
            const std::string& s = a->args[0].var();
            const std::string& o = a->args[1].var();
            bool forward = s != qvar && o == qvar;
            bool backward = s == qvar && o != qvar;
            if (!forward && !backward) continue;
            const Binding* anchor = lookup(env, forward ? s : o);
            if (!anchor) continue;
            const Association* assoc = m_.association_for(a->fact);
            if (!assoc) continue;
            const AssociationEnd& end = forward ? assoc->forward_end : assoc->reverse_end;
            if (end.target != qclass) continue;
            std::vector<FormPtr> rest;
            for (size_t j = 0; j < parts.size(); ++j)
                if (j != i) rest.push_back(parts[j]);
            return LinkNav{o_nav(anchor->expr, end.role), rebuild_and(rest)};
        }
        return std::nullopt;
    }

    OclExprPtr map_quantifier(const Quantification& q, Env& env) {
        // Try to realize the quantification as navigation from a bound
        // variable. Universals distribute over the premise of an implication
        // ("each T that is linked ... must ..."); the other kinds read their
        // link from the scope's conjunction.
        if (q.kind == QuantKind::Universal) {
            if (const auto* imp = q.scope->as<ImpliesF>()) {
                std::vector<FormPtr> premise;
                flatten_and(imp->left, premise);
                if (auto link = extract_link(premise, q.var, class_of(q.over), env)) {
                    FormPtr inner = link->residue ? mk_implies(link->residue, imp->right)
                                                  : imp->right;
                    return iter_scope(std::move(link->nav), IterKind::ForAll, q, inner, env);
                }
            }
        } else {
            std::vector<FormPtr> parts;
            flatten_and(q.scope, parts);
            if (auto link = extract_link(parts, q.var, class_of(q.over), env))
                return navigate_quant(q, std::move(link->nav), link->residue, env);
        }
        return closed_quant(q, env);
    }

    OclExprPtr iter_scope(OclExprPtr src, IterKind kind, const Quantification& q,
                          const FormPtr& body, Env& env) {
        env.emplace_back(q.var, Binding{o_var(q.var), q.over});
        OclExprPtr mapped = map_form(body, env);
        env.pop_back();
        return o_iter(std::move(src), kind, q.var, std::move(mapped));
    }

    OclExprPtr navigate_quant(const Quantification& q, OclExprPtr nav, const FormPtr& residue,
                              Env& env) {
        switch (q.kind) {
        case QuantKind::Existential:
            if (!residue) return o_collop(std::move(nav), CollOpKind::NotEmpty);
            return iter_scope(std::move(nav), IterKind::Exists, q, residue, env);
        case QuantKind::None:
            if (!residue) return o_collop(std::move(nav), CollOpKind::IsEmpty);
            return o_collop(iter_scope(std::move(nav), IterKind::Select, q, residue, env),
                            CollOpKind::IsEmpty);
        case QuantKind::AtLeast:
        case QuantKind::AtMost:
        case QuantKind::Exactly:
        case QuantKind::MoreThan: {
            OclExprPtr base = residue
                                  ? iter_scope(std::move(nav), IterKind::Select, q, residue, env)
                                  : std::move(nav);
            return o_cmp(count_cmp(q.kind), o_collop(std::move(base), CollOpKind::Size),
                         o_int(*q.n));
        }
        case QuantKind::Universal:
            break; // handled by the caller via the implication premise
        }
        // Unreachable for parser-produced rules; fall back to the closed form.
        return closed_quant(q, env);
    }

    static CmpKind count_cmp(QuantKind k) {
        switch (k) {
        case QuantKind::AtLeast: return CmpKind::Ge;
        case QuantKind::AtMost: return CmpKind::Le;
        case QuantKind::Exactly: return CmpKind::Eq;
        case QuantKind::MoreThan: return CmpKind::Gt;
        default: return CmpKind::Eq;
        }
    }

    OclExprPtr closed_quant(const Quantification& q, Env& env) {
        OclExprPtr all = o_all_instances(class_of(q.over));
        switch (q.kind) {
        case QuantKind::Universal:
            return iter_scope(std::move(all), IterKind::ForAll, q, q.scope, env);
        case QuantKind::Existential:
            return iter_scope(std::move(all), IterKind::Exists, q, q.scope, env);
        case QuantKind::None:
            return o_collop(iter_scope(std::move(all), IterKind::Select, q, q.scope, env),
                            CollOpKind::IsEmpty);
        case QuantKind::AtLeast:
        case QuantKind::AtMost:
        case QuantKind::Exactly:
        case QuantKind::MoreThan:
            return o_cmp(count_cmp(q.kind),
                         o_collop(iter_scope(std::move(all), IterKind::Select, q, q.scope, env),
                                  CollOpKind::Size),
                         o_int(*q.n));
        }
        throw MapError{"E_NO_CONTEXT", "unrecognized quantifier"};
    }
};

} // namespace

MapResult map_rule(const SbvrRule& r, const Vocabulary& v, const ClassModel& m) {
    MapResult result;
    for (const FeatureViolation& violation : check_supported(r))
        result.errors.emplace_back(violation.code, violation.description);
    if (!result.errors.empty()) return result;

    Mapper mapper(r, v, m);
    try {
        OclConstraint c = mapper.run();
        result.warnings = std::move(mapper.warnings);
        result.constraint = std::move(c);
    } catch (const MapError& e) {
        result.warnings = std::move(mapper.warnings);
        result.errors.emplace_back(e.code, e.message);
    }
    return result;
}

} // namespace sbvr2ocl
