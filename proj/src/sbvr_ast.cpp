#include "sbvr2ocl/sbvr_ast.hpp"

#include <sstream>

namespace sbvr2ocl {

RuleClass classify_rule(const SbvrRule& r) {
    switch (r.modality) {
    case Modality::Necessity:
    case Modality::Impossibility:
        return RuleClass::Structural;
    case Modality::Obligation:
    case Modality::Prohibition:
        return RuleClass::Operative;
    }
    return RuleClass::Structural;
}

std::string to_string(Modality m) {
    switch (m) {
    case Modality::Necessity: return "necessity";
    case Modality::Impossibility: return "impossibility";
    case Modality::Obligation: return "obligation";
    case Modality::Prohibition: return "prohibition";
    }
    return "?";
}

namespace {

void collect_violations(const FormPtr& f, int rule_index, std::vector<FeatureViolation>& out) {
    if (!f) return;
    if (const auto* q = f->as<Quantification>()) {
        collect_violations(q->scope, rule_index, out);
    } else if (const auto* a = f->as<Atomic>()) {
        for (const auto& arg : a->args) {
            if (!arg.is_var()) {
                out.push_back({rule_index, "E_INDIVIDUAL_CONCEPT",
                               "rule refers to a named individual, which has no counterpart in "
                               "the target language"});
            }
        }
    } else if (const auto* n = f->as<NotF>()) {
        collect_violations(n->inner, rule_index, out);
    } else if (const auto* b = f->as<AndF>()) {
        collect_violations(b->left, rule_index, out);
        collect_violations(b->right, rule_index, out);
    } else if (const auto* b2 = f->as<OrF>()) {
        collect_violations(b2->left, rule_index, out);
        collect_violations(b2->right, rule_index, out);
    } else if (const auto* b3 = f->as<ImpliesF>()) {
        collect_violations(b3->left, rule_index, out);
        collect_violations(b3->right, rule_index, out);
    } else if (const auto* p = f->as<ProjectionF>()) {
        if (p->kind == ProjectionKind::Closed) {
            out.push_back({rule_index, "E_CLOSED_PROJECTION",
                           "closed projections cannot be expressed in the target language"});
        }
        collect_violations(p->inner, rule_index, out);
    }
}

void collect_vars(const FormPtr& f, std::set<std::string> scope, VarSets& out) {
    if (!f) return;
    if (const auto* q = f->as<Quantification>()) {
        out.bound.insert(q->var);
        scope.insert(q->var);
        collect_vars(q->scope, std::move(scope), out);
    } else if (const auto* a = f->as<Atomic>()) {
        for (const auto& arg : a->args) {
            if (arg.is_var() && !scope.contains(arg.var())) out.free.insert(arg.var());
        }
    } else if (const auto* c = f->as<CharacteristicTest>()) {
        if (!scope.contains(c->var)) out.free.insert(c->var);
    } else if (const auto* ac = f->as<AttrComparison>()) {
        if (!scope.contains(ac->var)) out.free.insert(ac->var);
    } else if (const auto* n = f->as<NotF>()) {
        collect_vars(n->inner, std::move(scope), out);
    } else if (const auto* b = f->as<AndF>()) {
        collect_vars(b->left, scope, out);
        collect_vars(b->right, std::move(scope), out);
    } else if (const auto* b2 = f->as<OrF>()) {
        collect_vars(b2->left, scope, out);
        collect_vars(b2->right, std::move(scope), out);
    } else if (const auto* b3 = f->as<ImpliesF>()) {
        collect_vars(b3->left, scope, out);
        collect_vars(b3->right, std::move(scope), out);
    } else if (const auto* p = f->as<ProjectionF>()) {
        collect_vars(p->inner, std::move(scope), out);
    }
}

const char* cmp_text(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Gt: return ">";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Le: return "<=";
    }
    return "?";
}

void dump_into(const FormPtr& f, const Vocabulary& v, std::ostringstream& os) {
    if (!f) {
        os << "<null>";
        return;
    }
    if (const auto* q = f->as<Quantification>()) {
        os << '(';
        switch (q->kind) {
        case QuantKind::Universal: os << "forall"; break;
        case QuantKind::Existential: os << "exists"; break;
        case QuantKind::AtLeast: os << "at-least " << *q->n; break;
        case QuantKind::AtMost: os << "at-most " << *q->n; break;
        case QuantKind::Exactly: os << "exactly " << *q->n; break;
        case QuantKind::MoreThan: os << "more-than " << *q->n; break;
        case QuantKind::None: os << "no"; break;
        }
        os << ' ' << q->var << ':' << v.object_type(q->over).term << ' ';
        dump_into(q->scope, v, os);
        os << ')';
    } else if (const auto* a = f->as<Atomic>()) {
        os << '(' << v.fact_type(a->fact).verb_phrase;
        for (const auto& arg : a->args) {
            os << ' ';
            if (arg.is_var()) os << arg.var();
            else os << '"' << v.individual(arg.individual_id()).name << '"';
        }
        os << ')';
    } else if (const auto* c = f->as<CharacteristicTest>()) {
        os << "(is-" << v.characteristic(c->characteristic).adjective << ' ' << c->var << ')';
    } else if (const auto* ac = f->as<AttrComparison>()) {
        os << '(' << cmp_text(ac->op) << " (attr " << ac->var << ' '
           << v.attribute(ac->attribute).name << ") " << to_literal_text(ac->literal) << ')';
    } else if (const auto* n = f->as<NotF>()) {
        os << "(not ";
        dump_into(n->inner, v, os);
        os << ')';
    } else if (const auto* b = f->as<AndF>()) {
        os << "(and ";
        dump_into(b->left, v, os);
        os << ' ';
        dump_into(b->right, v, os);
        os << ')';
    } else if (const auto* b2 = f->as<OrF>()) {
        os << "(or ";
        dump_into(b2->left, v, os);
        os << ' ';
        dump_into(b2->right, v, os);
        os << ')';
    } else if (const auto* b3 = f->as<ImpliesF>()) {
        os << "(implies ";
        dump_into(b3->left, v, os);
        os << ' ';
        dump_into(b3->right, v, os);
        os << ')';
    } else if (const auto* p = f->as<ProjectionF>()) {
        os << '(';
        switch (p->kind) {
        case ProjectionKind::Set: os << "set-of"; break;
        case ProjectionKind::Bag: os << "bag-of"; break;
        case ProjectionKind::Closed: os << "closed-set-of"; break;
        }
        os << ' ';
        dump_into(p->inner, v, os);
        os << ')';
    }
}

} // namespace

std::vector<FeatureViolation> check_supported(const SbvrRule& r) {
    std::vector<FeatureViolation> out;
    collect_violations(r.body, r.index, out);
    return out;
}

VarSets free_and_bound_vars(const FormPtr& f) {
    VarSets out;
    collect_vars(f, {}, out);
    return out;
}

std::string dump_formulation(const FormPtr& f, const Vocabulary& v) {
    std::ostringstream os;
    dump_into(f, v, os);
    return os.str();
}

std::string dump_rule(const SbvrRule& r, const Vocabulary& v) {
    std::ostringstream os;
    os << "rule " << r.index << ' ' << to_string(r.modality) << ' ';
    dump_into(r.body, v, os);
    return os.str();
}

} // namespace sbvr2ocl
