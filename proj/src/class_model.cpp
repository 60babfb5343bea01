#include "sbvr2ocl/class_model.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace sbvr2ocl {

std::string upper_camel_case(std::string_view term) {
    std::string out;
    bool up = true;
    for (char c : term) {
        if (c == '_') {
            up = true;
            continue;
        }
        out += up && c >= 'a' && c <= 'z' ? char(c - 'a' + 'A') : c;
        up = false;
    }
    return out;
}

namespace {

std::string sanitize(std::string_view verb) {
    std::string out;
    for (char c : verb)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

} // namespace

const UmlClass* ClassModel::find_class(std::string_view name) const {
    for (const auto& c : classes)
        if (c.name == name) return &c;
    return nullptr;
}

const UmlAttribute* ClassModel::find_attribute(std::string_view klass,
                                               std::string_view name) const {
    const UmlClass* c = find_class(klass);
    int guard = int(classes.size()) + 1;
    while (c && guard-- > 0) {
        for (const auto& a : c->attributes)
            if (a.name == name) return &a;
        c = c->parent ? find_class(*c->parent) : nullptr;
    }
    return nullptr;
}

const AssociationEnd* ClassModel::find_end(std::string_view klass, std::string_view role) const {
    const UmlClass* c = find_class(klass);
    int guard = int(classes.size()) + 1;
    while (c && guard-- > 0) {
        for (const auto& e : c->ends)
            if (e.role == role) return &e;
        c = c->parent ? find_class(*c->parent) : nullptr;
    }
    return nullptr;
}

const UmlOperation* ClassModel::find_operation(std::string_view klass,
                                               std::string_view name) const {
    const UmlClass* c = find_class(klass);
    int guard = int(classes.size()) + 1;
    while (c && guard-- > 0) {
        for (const auto& op : c->operations)
            if (op.name == name) return &op;
        c = c->parent ? find_class(*c->parent) : nullptr;
    }
    return nullptr;
}

bool ClassModel::conforms(std::string_view sub, std::string_view super) const {
    const UmlClass* c = find_class(sub);
    int guard = int(classes.size()) + 1;
    while (c && guard-- > 0) {
        if (c->name == super) return true;
        c = c->parent ? find_class(*c->parent) : nullptr;
    }
    return false;
}

const Association* ClassModel::association_for(FactTypeId fact) const {
    for (const auto& a : associations)
        if (a.fact == fact) return &a;
    return nullptr;
}

std::optional<std::string> ClassModel::class_of_term(ObjectTypeId term) const {
    for (const auto& c : classes)
        if (c.term == term) return c.name;
    return std::nullopt;
}

LoadResult<ClassModel> derive_class_model(const Vocabulary& v) {
    LoadResult<ClassModel> result;
    ClassModel m;

    for (size_t i = 0; i < v.object_types.size(); ++i) {
        UmlClass c;
        c.name = upper_camel_case(v.object_types[i].term);
        c.term = ObjectTypeId{int32_t(i)};
        m.classes.push_back(std::move(c));
    }
    auto class_index = [&](ObjectTypeId t) -> UmlClass& { return m.classes[t.index]; };

    // Generalizations first so inherited members are visible to clash checks.
    for (const auto& f : v.fact_types)
        if (f.kind == FactKind::Categorization && f.subject != *f.object)
            class_index(f.subject).parent = class_index(*f.object).name;

    // Two or more fact types over the same ordered participant pair get their
    // role names suffixed with the verb phrase to keep them distinct.
    std::map<std::pair<int32_t, int32_t>, int> pair_counts;
    for (const auto& f : v.fact_types)
        if (f.kind == FactKind::Associative || f.kind == FactKind::Partitive)
            ++pair_counts[{f.subject.index, f.object->index}];

    for (size_t i = 0; i < v.fact_types.size(); ++i) {
        const auto& f = v.fact_types[i];
        FactTypeId fid{int32_t(i)};
        if (f.kind != FactKind::Associative && f.kind != FactKind::Partitive) continue;

        bool suffixed = pair_counts[{f.subject.index, f.object->index}] > 1;
        auto role = [&](ObjectTypeId opposite) {
            std::string r = v.object_type(opposite).term;
            if (suffixed) r += "_" + sanitize(f.verb_phrase);
            return r;
        };
        MultiplicityDecl mult = v.multiplicity_for(fid);

        Association assoc;
        assoc.fact = fid;
        assoc.source = class_index(f.subject).name;
        assoc.target = class_index(*f.object).name;
        assoc.composite = f.kind == FactKind::Partitive;
        assoc.forward_end = {role(*f.object), assoc.target, mult.forward, mult.forward_unique,
                             fid, true};
        assoc.reverse_end = {role(f.subject), assoc.source, mult.reverse, mult.reverse_unique,
                             fid, false};
        class_index(f.subject).ends.push_back(assoc.forward_end);
        class_index(*f.object).ends.push_back(assoc.reverse_end);
        m.associations.push_back(std::move(assoc));

        if (f.is_action) {
            UmlOperation op;
            op.name = sanitize(f.verb_phrase);
            op.params.push_back({v.object_type(*f.object).term, class_index(*f.object).name});
            op.fact = fid;
            class_index(f.subject).operations.push_back(std::move(op));
        }
    }

    for (const auto& a : v.attributes)
        class_index(a.owner).attributes.push_back({a.name, a.value_type, false});
    for (const auto& c : v.characteristics)
        class_index(c.owner).attributes.push_back({c.adjective, ValueType::Boolean, true});

    // Name clash detection: attributes and association ends share a namespace
    // within a class, including inherited members; operations have their own.
    for (const auto& c : m.classes) {
        std::map<std::string, int> members, ops;
        const UmlClass* cur = &c;
        int guard = int(m.classes.size()) + 1;
        while (cur && guard-- > 0) {
            for (const auto& a : cur->attributes) ++members[a.name];
            for (const auto& e : cur->ends) ++members[e.role];
            for (const auto& op : cur->operations) ++ops[op.name];
            cur = cur->parent ? m.find_class(*cur->parent) : nullptr;
        }
        // Only report on the class whose own members participate in the clash,
        // so a base-class clash is not repeated for every subclass.
        auto own_has = [&](const std::string& name) {
            for (const auto& a : c.attributes)
                if (a.name == name) return true;
            for (const auto& e : c.ends)
                if (e.role == name) return true;
            for (const auto& op : c.operations)
                if (op.name == name) return true;
            return false;
        };
        for (const auto& [name, count] : members)
            if (count > 1 && own_has(name))
                result.diagnostics.push_back({Severity::Error, "E_NAME_CLASH",
                                              "class " + c.name + " has " +
                                                  std::to_string(count) +
                                                  " members named '" + name + "'",
                                              0, 0});
        for (const auto& [name, count] : ops)
            if (count > 1 && own_has(name))
                result.diagnostics.push_back({Severity::Error, "E_NAME_CLASH",
                                              "class " + c.name + " has " +
                                                  std::to_string(count) +
                                                  " operations named '" + name + "'",
                                              0, 0});
    }

    if (!any_errors(result.diagnostics)) result.value = std::move(m);
    return result;
}

std::string dump_class_model(const ClassModel& m) {
    std::ostringstream os;
    auto bounds_text = [](const Bounds& b) {
        std::string s = std::to_string(b.low) + "..";
        s += b.high ? std::to_string(*b.high) : "*";
        return s;
    };
    for (const auto& c : m.classes) {
        os << "class " << c.name;
        if (c.parent) os << " : " << *c.parent;
        os << '\n';
        for (const auto& a : c.attributes)
            os << "  attr " << a.name << " : " << to_string(a.type)
               << (a.from_characteristic ? " (characteristic)" : "") << '\n';
        for (const auto& e : c.ends)
            os << "  end " << e.role << " : " << e.target << " [" << bounds_text(e.bounds) << "]"
               << (e.unique ? "" : " nonunique") << '\n';
        for (const auto& op : c.operations) {
            os << "  op " << op.name << '(';
            for (size_t i = 0; i < op.params.size(); ++i) {
                if (i) os << ", ";
                os << op.params[i].name << " : " << op.params[i].klass;
            }
            os << ")\n";
        }
    }
    for (const auto& a : m.associations)
        os << "assoc " << a.source << " -> " << a.target << (a.composite ? " composite" : "")
           << '\n';
    return os.str();
}

} // namespace sbvr2ocl
