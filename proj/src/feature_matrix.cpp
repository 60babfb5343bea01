#include "sbvr2ocl/feature_matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sbvr2ocl {

namespace {

void walk(const FormPtr& f, const std::function<void(const Formulation&)>& visit) {
    if (!f) return;
    visit(*f);
    if (const auto* q = f->as<Quantification>()) walk(q->scope, visit);
    if (const auto* n = f->as<NotF>()) walk(n->inner, visit);
    if (const auto* a = f->as<AndF>()) { walk(a->left, visit); walk(a->right, visit); }
    if (const auto* o = f->as<OrF>()) { walk(o->left, visit); walk(o->right, visit); }
    if (const auto* i = f->as<ImpliesF>()) { walk(i->left, visit); walk(i->right, visit); }
    if (const auto* p = f->as<ProjectionF>()) walk(p->inner, visit);
}

bool rule_uses(const SbvrRule& r, const std::function<bool(const Formulation&)>& pred) {
    bool found = false;
    walk(r.body, [&](const Formulation& f) { found = found || pred(f); });
    return found;
}

uint64_t count_rules(const std::vector<SbvrRule>& rules,
                     const std::function<bool(const Formulation&)>& pred) {
    uint64_t n = 0;
    for (const auto& r : rules)
        if (rule_uses(r, pred)) ++n;
    return n;
}

bool is_counting(QuantKind k) {
    return k == QuantKind::AtLeast || k == QuantKind::AtMost || k == QuantKind::Exactly ||
           k == QuantKind::MoreThan;
}

} // namespace

FeatureMatrix build_feature_matrix(const std::vector<SbvrRule>& rules,
                                   const std::vector<MapResult>& outcomes, const Vocabulary& v) {
    uint64_t invariants = 0, pre_post = 0;
    for (const auto& o : outcomes) {
        if (!o.constraint) continue;
        if (o.constraint->kind == ConstraintKind::Inv)
            ++invariants;
        else
            ++pre_post;
    }

    uint64_t closed = count_rules(rules, [](const Formulation& f) {
        const auto* p = f.as<ProjectionF>();
        return p && p->kind == ProjectionKind::Closed;
    });
    uint64_t sets = count_rules(rules, [](const Formulation& f) {
        if (f.as<Quantification>()) return true;
        const auto* p = f.as<ProjectionF>();
        return p && p->kind == ProjectionKind::Set;
    });
    uint64_t bags = count_rules(rules, [](const Formulation& f) {
        const auto* p = f.as<ProjectionF>();
        return p && p->kind == ProjectionKind::Bag;
    });
    uint64_t counting = count_rules(rules, [](const Formulation& f) {
        const auto* q = f.as<Quantification>();
        return q && is_counting(q->kind);
    });
    uint64_t characteristics = count_rules(
        rules, [](const Formulation& f) { return f.as<CharacteristicTest>() != nullptr; });
    uint64_t actions = count_rules(rules, [&](const Formulation& f) {
        const auto* a = f.as<Atomic>();
        return a && v.fact_type(a->fact).is_action;
    });
    uint64_t individuals = count_rules(rules, [](const Formulation& f) {
        const auto* a = f.as<Atomic>();
        if (!a) return false;
        return std::any_of(a->args.begin(), a->args.end(),
                           [](const AtomArg& arg) { return !arg.is_var(); });
    });

    FeatureMatrix fm;
    fm.rows = {
        {"Query support", false, true, 0},
        {"Sequence collection", false, true, 0},
        {"Closed projection", true, false, closed},
        {"Graphical notation", false, false, 0},
        {"Set collection", true, true, sets},
        {"Bag collection", true, true, bags},
        {"Invariants", true, true, invariants},
        {"Pre/post conditions", true, true, pre_post},
        {"Counting quantifiers", true, true, counting},
        {"Characteristics", true, true, characteristics},
        {"Action verbs", true, true, actions},
        {"Individual concepts", true, false, individuals},
    };
    return fm;
}

std::string render_feature_matrix_text(const FeatureMatrix& fm) {
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    size_t name_w = std::string("feature").size();
    size_t usage_w = std::string("usage").size();
    for (const auto& r : fm.rows) {
        name_w = std::max(name_w, r.feature.size());
        usage_w = std::max(usage_w, std::to_string(r.usage_count).size());
    }
    std::ostringstream os;
    auto line = [&](const std::string& name, const std::string& sbvr, const std::string& ocl,
                    const std::string& usage) {
        os << name << std::string(name_w - name.size(), ' ') << "  ";
        os << sbvr << std::string(4 - sbvr.size(), ' ') << "  ";
        os << ocl << std::string(3 - ocl.size(), ' ') << "  ";
        os << std::string(usage_w - usage.size(), ' ') << usage << '\n';
    };
    line("feature", "sbvr", "ocl", "usage");
    for (const auto& r : fm.rows)
        line(r.feature, flag(r.sbvr_supported), flag(r.ocl_supported),
             std::to_string(r.usage_count));
    return os.str();
}

std::string render_feature_matrix_json(const FeatureMatrix& fm) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : fm.rows) {
        nlohmann::ordered_json row;
        row["feature"] = r.feature;
        row["sbvr_supported"] = r.sbvr_supported;
        row["ocl_supported"] = r.ocl_supported;
        row["usage_count"] = r.usage_count;
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace sbvr2ocl
