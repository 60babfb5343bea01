#include "sbvr2ocl/vocabulary.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "line_format.hpp"

namespace sbvr2ocl {

std::string to_string(ValueType t) {
    switch (t) {
    case ValueType::Integer: return "Integer";
    case ValueType::String: return "String";
    case ValueType::Boolean: return "Boolean";
    }
    return "?";
}

std::string to_literal_text(const Value& val) {
    switch (val.type()) {
    case ValueType::Integer: return std::to_string(val.as_int());
    case ValueType::String: return "\"" + val.as_string() + "\"";
    case ValueType::Boolean: return val.as_bool() ? "true" : "false";
    }
    return "?";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << (d.severity == Severity::Error ? "error" : "warning") << ' ' << d.code;
    if (d.line > 0) os << " (" << d.line << ':' << d.col << ')';
    os << ": " << d.message;
    return os.str();
}

namespace {

bool is_lower_word(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || c == '_')) return false;
    return true;
}

using lines::RawLine;
using lines::RawToken;
using lines::split_directives;

std::optional<Bounds> parse_bounds(std::string_view s) {
    size_t dots = s.find("..");
    if (dots == std::string_view::npos) return std::nullopt;
    std::string_view lo = s.substr(0, dots), hi = s.substr(dots + 2);
    Bounds b;
    auto [p1, e1] = std::from_chars(lo.data(), lo.data() + lo.size(), b.low);
    if (e1 != std::errc{} || p1 != lo.data() + lo.size()) return std::nullopt;
    if (hi == "*") {
        b.high = std::nullopt;
    } else {
        int64_t h = 0;
        auto [p2, e2] = std::from_chars(hi.data(), hi.data() + hi.size(), h);
        if (e2 != std::errc{} || p2 != hi.data() + hi.size()) return std::nullopt;
        b.high = h;
    }
    return b;
}

} // namespace

std::optional<ObjectTypeId> Vocabulary::resolve_term(std::string_view surface) const {
    for (size_t i = 0; i < object_types.size(); ++i) {
        const auto& ot = object_types[i];
        if (ot.term == surface || (ot.plural && *ot.plural == surface))
            return ObjectTypeId{int32_t(i)};
    }
    return std::nullopt;
}

std::optional<ObjectTypeId> Vocabulary::find_term(std::string_view singular) const {
    for (size_t i = 0; i < object_types.size(); ++i)
        if (object_types[i].term == singular) return ObjectTypeId{int32_t(i)};
    return std::nullopt;
}

std::optional<IndividualId> Vocabulary::find_individual(std::string_view name) const {
    for (size_t i = 0; i < individuals.size(); ++i)
        if (individuals[i].name == name) return IndividualId{int32_t(i)};
    return std::nullopt;
}

std::optional<AttributeId> Vocabulary::find_attribute_exact(ObjectTypeId owner,
                                                            std::string_view name) const {
    for (size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].owner == owner && attributes[i].name == name)
            return AttributeId{int32_t(i)};
    return std::nullopt;
}

std::optional<ObjectTypeId> Vocabulary::parent_of(ObjectTypeId t) const {
    for (const auto& f : fact_types)
        if (f.kind == FactKind::Categorization && f.subject == t && f.object && *f.object != t)
            return f.object;
    return std::nullopt;
}

bool Vocabulary::conforms(ObjectTypeId child, ObjectTypeId ancestor) const {
    ObjectTypeId cur = child;
    int guard = int(object_types.size()) + 1;
    while (guard-- > 0) {
        if (cur == ancestor) return true;
        auto p = parent_of(cur);
        if (!p) return false;
        cur = *p;
    }
    return false;
}

std::optional<AttributeId> Vocabulary::find_attribute(ObjectTypeId owner,
                                                      std::string_view name) const {
    ObjectTypeId cur = owner;
    int guard = int(object_types.size()) + 1;
    while (guard-- > 0) {
        if (auto a = find_attribute_exact(cur, name)) return a;
        auto p = parent_of(cur);
        if (!p) return std::nullopt;
        cur = *p;
    }
    return std::nullopt;
}

std::optional<CharacteristicId> Vocabulary::find_characteristic(ObjectTypeId owner,
                                                                std::string_view adjective) const {
    ObjectTypeId cur = owner;
    int guard = int(object_types.size()) + 1;
    while (guard-- > 0) {
        for (size_t i = 0; i < characteristics.size(); ++i)
            if (characteristics[i].owner == cur && characteristics[i].adjective == adjective)
                return CharacteristicId{int32_t(i)};
        auto p = parent_of(cur);
        if (!p) return std::nullopt;
        cur = *p;
    }
    return std::nullopt;
}

std::optional<FactTypeId> Vocabulary::find_fact(ObjectTypeId subject, std::string_view verb,
                                                std::optional<ObjectTypeId> object) const {
    for (size_t i = 0; i < fact_types.size(); ++i) {
        const auto& f = fact_types[i];
        if (f.kind != FactKind::Associative && f.kind != FactKind::Partitive) continue;
        if (f.verb_phrase != verb) continue;
        if (!conforms(subject, f.subject)) continue;
        if (object.has_value() != f.object.has_value()) continue;
        if (object && !conforms(*object, *f.object)) continue;
        return FactTypeId{int32_t(i)};
    }
    return std::nullopt;
}

bool Vocabulary::verb_opens_fact(ObjectTypeId subject, std::string_view verb) const {
    for (const auto& f : fact_types) {
        if (f.kind != FactKind::Associative && f.kind != FactKind::Partitive) continue;
        if (f.verb_phrase == verb && f.object && conforms(subject, f.subject)) return true;
    }
    return false;
}

MultiplicityDecl Vocabulary::multiplicity_for(FactTypeId fact) const {
    for (const auto& m : multiplicities)
        if (m.fact == fact) return m;
    MultiplicityDecl def;
    def.fact = fact;
    def.forward = Bounds{0, std::nullopt};
    def.reverse = Bounds{0, std::nullopt};
    return def;
}

size_t Vocabulary::max_verb_words() const {
    size_t n = 1;
    for (const auto& f : fact_types) {
        size_t words = 1 + size_t(std::count(f.verb_phrase.begin(), f.verb_phrase.end(), ' '));
        n = std::max(n, words);
    }
    return n;
}

LoadResult<Vocabulary> load_vocabulary(std::string_view source) {
    LoadResult<Vocabulary> result;
    auto& diags = result.diagnostics;
    Vocabulary v;

    auto err = [&](int line, int col, std::string code, std::string msg) {
        diags.push_back({Severity::Error, std::move(code), std::move(msg), line, col});
    };

    auto lines = split_directives(source);

    // Pass 1: terms, so later directives may reference terms declared anywhere.
    std::set<std::string> names_taken;
    for (const auto& rl : lines) {
        if (rl.tokens[0].text != "term") continue;
        // term <t> [plural <p>]
        if (rl.tokens.size() != 2 && rl.tokens.size() != 4) {
            err(rl.line, rl.tokens[0].col, "E_SYNTAX", "malformed term directive");
            continue;
        }
        const std::string& t = rl.tokens[1].text;
        if (!is_lower_word(t)) {
            err(rl.line, rl.tokens[1].col, "E_SYNTAX",
                "term must be lowercase letters/underscores: '" + t + "'");
            continue;
        }
        std::optional<std::string> plural;
        if (rl.tokens.size() == 4) {
            if (rl.tokens[2].text != "plural" || !is_lower_word(rl.tokens[3].text)) {
                err(rl.line, rl.tokens[2].col, "E_SYNTAX", "malformed plural clause");
                continue;
            }
            plural = rl.tokens[3].text;
        }
        if (names_taken.count(t)) {
            err(rl.line, rl.tokens[1].col, "E_DUPLICATE", "name already declared: '" + t + "'");
            continue;
        }
        if (plural && names_taken.count(*plural)) {
            err(rl.line, rl.tokens[3].col, "E_DUPLICATE",
                "name already declared: '" + *plural + "'");
            continue;
        }
        if (plural && *plural == t) {
            err(rl.line, rl.tokens[3].col, "E_DUPLICATE",
                "plural equals singular: '" + t + "'");
            continue;
        }
        names_taken.insert(t);
        if (plural) names_taken.insert(*plural);
        v.object_types.push_back({t, plural});
    }

    auto require_term = [&](const RawToken& tok, int line) -> std::optional<ObjectTypeId> {
        auto id = v.find_term(tok.text);
        if (!id) err(line, tok.col, "E_UNKNOWN_TERM", "term not declared: '" + tok.text + "'");
        return id;
    };

    // Pass 2: everything else, in file order.
    for (const auto& rl : lines) {
        const std::string& head = rl.tokens[0].text;
        int line = rl.line;
        if (head == "term") continue;

        if (head == "instance") {
            // instance <Name...> : <term>
            size_t colon = 0;
            for (size_t k = 1; k < rl.tokens.size(); ++k)
                if (rl.tokens[k].text == ":") colon = k;
            if (colon < 2 || colon + 2 != rl.tokens.size()) {
                err(line, rl.tokens[0].col, "E_SYNTAX", "malformed instance directive");
                continue;
            }
            std::string name;
            for (size_t k = 1; k < colon; ++k) {
                if (k > 1) name += ' ';
                name += rl.tokens[k].text;
            }
            auto ty = require_term(rl.tokens[colon + 1], line);
            if (!ty) continue;
            if (v.find_individual(name)) {
                err(line, rl.tokens[1].col, "E_DUPLICATE",
                    "instance already declared: '" + name + "'");
                continue;
            }
            v.individuals.push_back({name, *ty});
        } else if (head == "fact") {
            // fact <term> <verb-words...> <term> [action]
            std::vector<RawToken> toks(rl.tokens.begin() + 1, rl.tokens.end());
            bool action = false;
            if (toks.size() >= 4 && toks.back().text == "action") {
                action = true;
                toks.pop_back();
            }
            if (toks.size() < 3) {
                err(line, rl.tokens[0].col, "E_SYNTAX", "malformed fact directive");
                continue;
            }
            auto subj = require_term(toks.front(), line);
            auto obj = require_term(toks.back(), line);
            if (!subj || !obj) continue;
            std::string verb;
            for (size_t k = 1; k + 1 < toks.size(); ++k) {
                if (k > 1) verb += ' ';
                verb += toks[k].text;
            }
            FactKind kind = FactKind::Associative;
            if (verb == "is-category-of") kind = FactKind::Categorization;
            else if (verb == "is-part-of") kind = FactKind::Partitive;
            if (action && kind != FactKind::Associative) {
                err(line, toks[1].col, "E_SYNTAX",
                    "only plain associative fact types may be actions");
                continue;
            }
            bool dup = false;
            for (const auto& f : v.fact_types)
                if (f.subject == *subj && f.verb_phrase == verb && f.object == *obj) dup = true;
            if (dup) {
                err(line, toks[0].col, "E_DUPLICATE",
                    "fact type already declared: '" + toks.front().text + " " + verb + " " +
                        toks.back().text + "'");
                continue;
            }
            v.fact_types.push_back({kind, *subj, verb, *obj, action});
        } else if (head == "attribute") {
            // attribute <term> . <name> : <Integer|String|Boolean>
            if (rl.tokens.size() != 6 || rl.tokens[2].text != "." || rl.tokens[4].text != ":") {
                err(line, rl.tokens[0].col, "E_SYNTAX", "malformed attribute directive");
                continue;
            }
            auto owner = require_term(rl.tokens[1], line);
            if (!owner) continue;
            const std::string& name = rl.tokens[3].text;
            if (!is_lower_word(name)) {
                err(line, rl.tokens[3].col, "E_SYNTAX",
                    "attribute name must be lowercase letters/underscores");
                continue;
            }
            ValueType vt;
            const std::string& tyname = rl.tokens[5].text;
            if (tyname == "Integer") vt = ValueType::Integer;
            else if (tyname == "String") vt = ValueType::String;
            else if (tyname == "Boolean") vt = ValueType::Boolean;
            else {
                err(line, rl.tokens[5].col, "E_SYNTAX",
                    "attribute type must be Integer, String or Boolean");
                continue;
            }
            if (v.find_attribute_exact(*owner, name)) {
                err(line, rl.tokens[3].col, "E_DUPLICATE",
                    "attribute already declared: '" + rl.tokens[1].text + "." + name + "'");
                continue;
            }
            v.attributes.push_back({*owner, name, vt});
        } else if (head == "characteristic") {
            // characteristic <term> is <adjective>
            if (rl.tokens.size() != 4 || rl.tokens[2].text != "is") {
                err(line, rl.tokens[0].col, "E_SYNTAX", "malformed characteristic directive");
                continue;
            }
            auto owner = require_term(rl.tokens[1], line);
            if (!owner) continue;
            const std::string& adj = rl.tokens[3].text;
            if (!is_lower_word(adj)) {
                err(line, rl.tokens[3].col, "E_SYNTAX",
                    "adjective must be lowercase letters/underscores");
                continue;
            }
            bool dup = false;
            for (const auto& c : v.characteristics)
                if (c.owner == *owner && c.adjective == adj) dup = true;
            if (dup) {
                err(line, rl.tokens[3].col, "E_DUPLICATE",
                    "characteristic already declared: '" + rl.tokens[1].text + " is " + adj + "'");
                continue;
            }
            v.characteristics.push_back({*owner, adj});
            v.fact_types.push_back(
                {FactKind::CharacteristicUnary, *owner, adj, std::nullopt, false});
        } else if (head == "multiplicity") {
            // multiplicity <term> <verb...> <term> : <b> , <b> [nonunique]
            size_t colon = 0;
            for (size_t k = 1; k < rl.tokens.size(); ++k)
                if (rl.tokens[k].text == ":") {
                    colon = k;
                    break;
                }
            if (colon < 4) {
                err(line, rl.tokens[0].col, "E_SYNTAX", "malformed multiplicity directive");
                continue;
            }
            size_t rest = rl.tokens.size() - colon - 1;
            bool nonunique = false;
            if (rest == 4 && rl.tokens.back().text == "nonunique") {
                nonunique = true;
                rest = 3;
            }
            if (rest != 3 || rl.tokens[colon + 2].text != ",") {
                err(line, rl.tokens[colon].col, "E_SYNTAX", "malformed multiplicity directive");
                continue;
            }
            auto fwd = parse_bounds(rl.tokens[colon + 1].text);
            auto rev = parse_bounds(rl.tokens[colon + 3].text);
            if (!fwd || !rev) {
                err(line, rl.tokens[colon + 1].col, "E_SYNTAX", "malformed bounds");
                continue;
            }
            auto subj = require_term(rl.tokens[1], line);
            auto obj = require_term(rl.tokens[colon - 1], line);
            if (!subj || !obj) continue;
            std::string verb;
            for (size_t k = 2; k + 1 < colon; ++k) {
                if (k > 2) verb += ' ';
                verb += rl.tokens[k].text;
            }
            std::optional<FactTypeId> fact;
            for (size_t i = 0; i < v.fact_types.size(); ++i) {
                const auto& f = v.fact_types[i];
                if (f.kind == FactKind::Associative && f.subject == *subj &&
                    f.verb_phrase == verb && f.object == *obj)
                    fact = FactTypeId{int32_t(i)};
            }
            if (!fact) {
                err(line, rl.tokens[1].col, "E_UNKNOWN_TERM",
                    "no associative fact type '" + rl.tokens[1].text + " " + verb + " " +
                        rl.tokens[colon - 1].text + "'");
                continue;
            }
            bool dup = false;
            for (const auto& m : v.multiplicities)
                if (m.fact == *fact) dup = true;
            if (dup) {
                err(line, rl.tokens[1].col, "E_DUPLICATE",
                    "multiplicity already declared for this fact type");
                continue;
            }
            v.multiplicities.push_back({*fact, *fwd, *rev, !nonunique, !nonunique});
        } else {
            err(line, rl.tokens[0].col, "E_SYNTAX", "unknown directive: '" + head + "'");
        }
    }

    if (!any_errors(diags)) result.value = std::move(v);
    return result;
}

std::string print_vocabulary(const Vocabulary& v) {
    std::ostringstream os;
    for (const auto& ot : v.object_types) {
        os << "term " << ot.term;
        if (ot.plural) os << " plural " << *ot.plural;
        os << '\n';
    }
    for (const auto& ind : v.individuals)
        os << "instance " << ind.name << " : " << v.object_type(ind.instance_of).term << '\n';
    for (const auto& f : v.fact_types) {
        if (f.kind == FactKind::CharacteristicUnary) continue; // printed as characteristics
        os << "fact " << v.object_type(f.subject).term << ' ' << f.verb_phrase << ' '
           << v.object_type(*f.object).term;
        if (f.is_action) os << " action";
        os << '\n';
    }
    for (const auto& a : v.attributes)
        os << "attribute " << v.object_type(a.owner).term << " . " << a.name << " : "
           << to_string(a.value_type) << '\n';
    for (const auto& c : v.characteristics)
        os << "characteristic " << v.object_type(c.owner).term << " is " << c.adjective << '\n';
    auto bounds_text = [](const Bounds& b) {
        std::string s = std::to_string(b.low) + "..";
        s += b.high ? std::to_string(*b.high) : "*";
        return s;
    };
    for (const auto& m : v.multiplicities) {
        const auto& f = v.fact_type(m.fact);
        os << "multiplicity " << v.object_type(f.subject).term << ' ' << f.verb_phrase << ' '
           << v.object_type(*f.object).term << " : " << bounds_text(m.forward) << " , "
           << bounds_text(m.reverse);
        if (!m.forward_unique) os << " nonunique";
        os << '\n';
    }
    return os.str();
}

} // namespace sbvr2ocl
