#include "sbvr2ocl/ocl_printer.hpp"

#include <sstream>

namespace sbvr2ocl {

namespace {

// Precedence levels, tightest binding first.
constexpr int kPrimary = 6; // navigation, calls, literals, variables
constexpr int kNot = 5;
constexpr int kCmp = 4;
constexpr int kAnd = 3;
constexpr int kOr = 2;
constexpr int kImplies = 1;

std::string literal_text(const Value& v) {
    switch (v.type()) {
    case ValueType::Integer: return std::to_string(v.as_int());
    case ValueType::String: return "'" + v.as_string() + "'";
    case ValueType::Boolean: return v.as_bool() ? "true" : "false";
    }
    return "?";
}

const char* cmp_text(CmpKind op) {
    switch (op) {
    case CmpKind::Eq: return "=";
    case CmpKind::Ne: return "<>";
    case CmpKind::Lt: return "<";
    case CmpKind::Le: return "<=";
    case CmpKind::Gt: return ">";
    case CmpKind::Ge: return ">=";
    }
    return "?";
}

const char* iter_text(IterKind k) {
    switch (k) {
    case IterKind::ForAll: return "forAll";
    case IterKind::Exists: return "exists";
    case IterKind::Select: return "select";
    }
    return "?";
}

const char* collop_text(CollOpKind k) {
    switch (k) {
    case CollOpKind::Size: return "size";
    case CollOpKind::IsEmpty: return "isEmpty";
    case CollOpKind::NotEmpty: return "notEmpty";
    }
    return "?";
}

// `min_prec` is the loosest precedence the surrounding context tolerates
// without parentheses.
void print_into(const OclExprPtr& e, int min_prec, std::ostringstream& os) {
    if (!e) {
        os << "<missing>";
        return;
    }
    auto parenthesize = [&](int prec, auto&& emit) {
        if (prec < min_prec) {
            os << '(';
            emit();
            os << ')';
        } else {
            emit();
        }
    };
    if (e->as<SelfRef>()) {
        os << "self";
    } else if (const auto* v = e->as<VarRef>()) {
        os << v->name;
    } else if (const auto* lit = e->as<LitE>()) {
        os << literal_text(lit->value);
    } else if (const auto* a = e->as<AttrNav>()) {
        print_into(a->src, kPrimary, os);
        os << '.' << a->attr;
    } else if (const auto* n = e->as<AssocNav>()) {
        print_into(n->src, kPrimary, os);
        os << '.' << n->end;
    } else if (const auto* ai = e->as<AllInstances>()) {
        os << ai->klass << ".allInstances()";
    } else if (const auto* it = e->as<IterCall>()) {
        print_into(it->src, kPrimary, os);
        os << "->" << iter_text(it->iter) << '(' << it->var << " | ";
        print_into(it->body, 0, os);
        os << ')';
    } else if (const auto* c = e->as<CollOp>()) {
        print_into(c->src, kPrimary, os);
        os << "->" << collop_text(c->op) << "()";
    } else if (const auto* cmp = e->as<CmpE>()) {
        parenthesize(kCmp, [&] {
            print_into(cmp->l, kCmp + 1, os);
            os << ' ' << cmp_text(cmp->op) << ' ';
            print_into(cmp->r, kCmp + 1, os);
        });
    } else if (const auto* b = e->as<BoolE>()) {
        int prec = b->op == BoolKind::And ? kAnd : b->op == BoolKind::Or ? kOr : kImplies;
        const char* word = b->op == BoolKind::And ? "and" : b->op == BoolKind::Or ? "or"
                                                                                  : "implies";
        parenthesize(prec, [&] {
            // and/or associate to the left, implies to the right.
            bool right_assoc = b->op == BoolKind::Implies;
            print_into(b->l, right_assoc ? prec + 1 : prec, os);
            os << ' ' << word << ' ';
            print_into(b->r, right_assoc ? prec : prec + 1, os);
        });
    } else if (const auto* nt = e->as<NotE>()) {
        parenthesize(kNot, [&] {
            os << "not ";
            print_into(nt->inner, kNot, os);
        });
    }
}

} // namespace

std::string print_expr(const OclExprPtr& e) {
    std::ostringstream os;
    print_into(e, 0, os);
    return os.str();
}

std::string print_constraint(const OclConstraint& c) {
    std::ostringstream os;
    os << "context " << c.context_class;
    if (c.operation) {
        os << "::" << c.operation->name << '(';
        bool first = true;
        for (const auto& [pname, pclass] : c.operation->params) {
            if (!first) os << ", ";
            first = false;
            os << pname << " : " << pclass;
        }
        os << ')';
    }
    os << '\n';
    switch (c.kind) {
    case ConstraintKind::Inv: os << "inv "; break;
    case ConstraintKind::Pre: os << "pre "; break;
    case ConstraintKind::Post: os << "post "; break;
    }
    os << c.label << ": " << print_expr(c.body);
    return os.str();
}

std::string print_ocl_file(const std::vector<OclConstraint>& constraints) {
    if (constraints.empty()) return "";
    std::string out;
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (i) out += "\n\n";
        out += print_constraint(constraints[i]);
    }
    out += "\n";
    return out;
}

} // namespace sbvr2ocl
