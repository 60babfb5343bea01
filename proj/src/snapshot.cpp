#include "sbvr2ocl/snapshot.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "line_format.hpp"

namespace sbvr2ocl {

namespace {

using lines::RawLine;
using lines::RawToken;
using lines::split_directives;

std::optional<std::optional<Value>> parse_value(const std::string& text) {
    if (text == "missing") return std::optional<Value>{};
    if (text == "true") return std::optional<Value>{Value::boolean(true)};
    if (text == "false") return std::optional<Value>{Value::boolean(false)};
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
        return std::optional<Value>{Value::string(text.substr(1, text.size() - 2))};
    int64_t n = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec == std::errc{} && p == text.data() + text.size())
        return std::optional<Value>{Value::integer(n)};
    return std::nullopt;
}

} // namespace

LoadResult<Snapshot> load_snapshot(std::string_view source, const Vocabulary& v) {
    LoadResult<Snapshot> result;
    Snapshot snap;
    std::map<std::string, ObjectTypeId, std::less<>> type_of;
    std::set<std::pair<std::string, std::string>> seen_attrs;
    std::set<std::tuple<int32_t, std::string, std::string>> seen_links;

    auto error = [&](const RawLine& l, int col, std::string code, std::string message) {
        result.diagnostics.push_back({Severity::Error, std::move(code), std::move(message),
                                      l.line, col});
    };

    for (const RawLine& l : split_directives(source)) {
        const auto& t = l.tokens;
        const std::string& head = t[0].text;
        if (head == "object") {
            // object <id> : <term>
            if (t.size() != 4 || t[2].text != ":") {
                error(l, t[0].col, "E_SYNTAX", "expected 'object <id> : <term>'");
                continue;
            }
            if (type_of.contains(t[1].text)) {
                error(l, t[1].col, "E_DUPLICATE", "object id '" + t[1].text + "' redeclared");
                continue;
            }
            auto type = v.resolve_term(t[3].text);
            if (!type) {
                error(l, t[3].col, "E_CLASS_UNKNOWN",
                      "term '" + t[3].text + "' is not in the vocabulary");
                continue;
            }
            type_of.emplace(t[1].text, *type);
            snap.objects.push_back({t[1].text, *type});
        } else if (head == "attr") {
            // attr <id> . <name> = <value>
            if (t.size() != 6 || t[2].text != "." || t[4].text != "=") {
                error(l, t[0].col, "E_SYNTAX", "expected 'attr <id> . <name> = <value>'");
                continue;
            }
            auto it = type_of.find(t[1].text);
            if (it == type_of.end()) {
                error(l, t[1].col, "E_UNKNOWN_ID", "object id '" + t[1].text + "' not declared");
                continue;
            }
            ValueType declared;
            if (auto attr = v.find_attribute(it->second, t[3].text)) {
                declared = v.attribute(*attr).value_type;
            } else if (v.find_characteristic(it->second, t[3].text)) {
                declared = ValueType::Boolean;
            } else {
                error(l, t[3].col, "E_UNKNOWN_ATTRIBUTE",
                      "no attribute '" + t[3].text + "' declared for term '" +
                          v.object_type(it->second).term + "'");
                continue;
            }
            auto value = parse_value(t[5].text);
            if (!value) {
                error(l, t[5].col, "E_SYNTAX", "cannot read value '" + t[5].text + "'");
                continue;
            }
            if (*value && (*value)->type() != declared) {
                error(l, t[5].col, "E_TYPE_MISMATCH",
                      "attribute '" + t[3].text + "' holds " + to_string(declared) +
                          " values, found '" + t[5].text + "'");
                continue;
            }
            if (!seen_attrs.emplace(t[1].text, t[3].text).second) {
                error(l, t[3].col, "E_DUPLICATE",
                      "attribute '" + t[3].text + "' of '" + t[1].text + "' assigned twice");
                continue;
            }
            snap.attrs.push_back({t[1].text, t[3].text, *value});
        } else if (head == "link") {
            // link <id> <verb-words...> <id>
            if (t.size() < 4) {
                error(l, t[0].col, "E_SYNTAX", "expected 'link <id> <verb> <id>'");
                continue;
            }
            auto subj = type_of.find(t[1].text);
            auto obj = type_of.find(t.back().text);
            if (subj == type_of.end()) {
                error(l, t[1].col, "E_UNKNOWN_ID", "object id '" + t[1].text + "' not declared");
                continue;
            }
            if (obj == type_of.end()) {
                error(l, t.back().col,
                      "E_UNKNOWN_ID", "object id '" + t.back().text + "' not declared");
                continue;
            }
            std::string verb;
            for (size_t i = 2; i + 1 < t.size(); ++i) {
                if (i > 2) verb += ' ';
                verb += t[i].text;
            }
            auto fact = v.find_fact(subj->second, verb, obj->second);
            if (!fact) {
                error(l, t[2].col, "E_UNKNOWN_FACT",
                      "no fact type '" + v.object_type(subj->second).term + " " + verb + " " +
                          v.object_type(obj->second).term + "'");
                continue;
            }
            if (!seen_links.emplace(fact->index, t[1].text, t.back().text).second) {
                error(l, t[0].col, "E_DUPLICATE", "link declared twice");
                continue;
            }
            snap.links.push_back({*fact, t[1].text, t.back().text});
        } else {
            error(l, t[0].col, "E_SYNTAX", "unknown directive '" + head + "'");
        }
    }

    if (!any_errors(result.diagnostics)) result.value = std::move(snap);
    return result;
}

std::string print_snapshot(const Snapshot& s, const Vocabulary& v) {
    std::ostringstream os;
    for (const auto& o : s.objects)
        os << "object " << o.id << " : " << v.object_type(o.type).term << "\n";
    for (const auto& a : s.attrs) {
        os << "attr " << a.object_id << " . " << a.attr << " = ";
        if (!a.value) {
            os << "missing";
        } else {
            switch (a.value->type()) {
            case ValueType::Integer: os << a.value->as_int(); break;
            case ValueType::String: os << '"' << a.value->as_string() << '"'; break;
            case ValueType::Boolean: os << (a.value->as_bool() ? "true" : "false"); break;
            }
        }
        os << "\n";
    }
    for (const auto& l : s.links)
        os << "link " << l.subject_id << " " << v.fact_type(l.fact).verb_phrase << " "
           << l.object_id << "\n";
    return os.str();
}

} // namespace sbvr2ocl
