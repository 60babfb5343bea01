#include "sbvr2ocl/enumerate.hpp"

#include <limits>
#include <optional>
#include <utility>

namespace sbvr2ocl {

namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) {
    if (a > kSaturated - b) return kSaturated;
    return a + b;
}

// One assignable position in a snapshot: either an attribute of one object
// (radix = domain size) or a possible link (radix 2: absent, present).
struct AttrSlot {
    std::string object_id;
    std::string attr;
};

struct LinkSlot {
    FactTypeId fact;
    std::string subject_id;
    std::string object_id;
};

struct Domains {
    std::vector<std::optional<Value>> integer, string, boolean;

    explicit Domains(const EnumOptions& opts) {
        for (int64_t n : opts.int_domain) integer.emplace_back(Value::integer(n));
        for (const auto& s : opts.string_domain) string.emplace_back(Value::string(s));
        boolean.emplace_back(Value::boolean(false));
        boolean.emplace_back(Value::boolean(true));
        if (opts.include_missing) {
            integer.emplace_back(std::nullopt);
            string.emplace_back(std::nullopt);
            boolean.emplace_back(std::nullopt);
        }
    }

    const std::vector<std::optional<Value>>& of(ValueType t) const {
        switch (t) {
        case ValueType::Integer: return integer;
        case ValueType::String: return string;
        case ValueType::Boolean: return boolean;
        }
        return integer;
    }
};

bool holds_links(const FactType& f) {
    return f.object.has_value() &&
           (f.kind == FactKind::Associative || f.kind == FactKind::Partitive);
}

// Attribute slots of one object: declared attributes first, then lowered
// characteristics, both in declaration order, inherited ones included.
struct TypeAttrs {
    std::vector<std::pair<std::string, ValueType>> slots;
};

TypeAttrs attrs_of_type(const Vocabulary& v, ObjectTypeId t) {
    TypeAttrs out;
    for (const auto& a : v.attributes)
        if (v.conforms(t, a.owner)) out.slots.emplace_back(a.name, a.value_type);
    for (const auto& c : v.characteristics)
        if (v.conforms(t, c.owner)) out.slots.emplace_back(c.adjective, ValueType::Boolean);
    return out;
}

// The per-type object counts, enumerated as an odometer with the
// last-declared type varying fastest.
class CountVector {
public:
    CountVector(size_t types, int max) : counts_(types, 0), max_(max) {}

    const std::vector<int>& get() const { return counts_; }

    bool advance() {
        for (size_t i = counts_.size(); i-- > 0;) {
            if (counts_[i] < max_) {
                ++counts_[i];
                return true;
            }
            counts_[i] = 0;
        }
        return false;
    }

private:
    std::vector<int> counts_;
    int max_;
};

struct Layout {
    Snapshot base; // objects only
    std::vector<AttrSlot> attr_slots;
    std::vector<LinkSlot> link_slots;
    std::vector<size_t> radices;                           // attr slots then link slots
    std::vector<const std::vector<std::optional<Value>>*> attr_domains; // parallel to attr_slots
};

Layout build_layout(const Vocabulary& v, const Domains& dom, const std::vector<int>& counts) {
    Layout lay;
    for (size_t k = 0; k < v.object_types.size(); ++k) {
        ObjectTypeId t{k};
        const std::string& term = v.object_types[k].term;
        for (int i = 1; i <= counts[k]; ++i)
            lay.base.objects.push_back({term + std::to_string(i), t});
    }
    for (size_t k = 0; k < v.object_types.size(); ++k) {
        TypeAttrs attrs = attrs_of_type(v, ObjectTypeId{k});
        if (attrs.slots.empty()) continue;
        for (const auto& o : lay.base.objects) {
            if (o.type.index != k) continue;
            for (const auto& [name, type] : attrs.slots) {
                lay.attr_slots.push_back({o.id, name});
                lay.attr_domains.push_back(&dom.of(type));
                lay.radices.push_back(dom.of(type).size());
            }
        }
    }
    for (size_t f = 0; f < v.fact_types.size(); ++f) {
        const FactType& fact = v.fact_types[f];
        if (!holds_links(fact)) continue;
        for (const auto& s : lay.base.objects) {
            if (!v.conforms(s.type, fact.subject)) continue;
            for (const auto& o : lay.base.objects) {
                if (!v.conforms(o.type, *fact.object)) continue;
                lay.link_slots.push_back({FactTypeId{f}, s.id, o.id});
                lay.radices.push_back(2);
            }
        }
    }
    return lay;
}

uint64_t layout_size(const Layout& lay) {
    uint64_t n = 1;
    for (size_t r : lay.radices) n = sat_mul(n, r);
    return n;
}

// Number of count vectors; the space has at least one snapshot per vector.
uint64_t count_vector_total(const Vocabulary& v, const EnumOptions& opts) {
    uint64_t n = 1;
    for (size_t k = 0; k < v.object_types.size(); ++k)
        n = sat_mul(n, static_cast<uint64_t>(opts.max_per_class) + 1);
    return n;
}

} // namespace

SpaceSize snapshot_space_size(const Vocabulary& v, const EnumOptions& opts) {
    // Guard the outer loop itself: each count vector contributes at least one
    // snapshot, so a huge vector count already implies a huge space.
    if (count_vector_total(v, opts) > (uint64_t{1} << 24)) return {kSaturated, true};
    Domains dom(opts);
    uint64_t total = 0;
    CountVector counts(v.object_types.size(), opts.max_per_class);
    do {
        Layout lay = build_layout(v, dom, counts.get());
        total = sat_add(total, layout_size(lay));
    } while (counts.advance());
    return {total, total == kSaturated};
}

EnumResult enumerate_snapshots(const Vocabulary& v, const EnumOptions& opts,
                               const std::function<void(const Snapshot&)>& yield) {
    EnumResult result;
    SpaceSize size = snapshot_space_size(v, opts);
    if (size.overflow || size.count > opts.cap) {
        std::string n = size.overflow ? "more than " + std::to_string(opts.cap)
                                      : std::to_string(size.count);
        result.diagnostics.push_back({Severity::Error, "E_TOO_LARGE",
                                      "snapshot space holds " + n + " snapshots; the cap is " +
                                          std::to_string(opts.cap),
                                      0, 0});
        return result;
    }

    Domains dom(opts);
    CountVector counts(v.object_types.size(), opts.max_per_class);
    do {
        Layout lay = build_layout(v, dom, counts.get());
        std::vector<size_t> digits(lay.radices.size(), 0);
        for (;;) {
            Snapshot snap = lay.base;
            for (size_t i = 0; i < lay.attr_slots.size(); ++i) {
                const auto& slot = lay.attr_slots[i];
                snap.attrs.push_back({slot.object_id, slot.attr, (*lay.attr_domains[i])[digits[i]]});
            }
            for (size_t i = 0; i < lay.link_slots.size(); ++i) {
                if (digits[lay.attr_slots.size() + i] == 0) continue;
                const auto& slot = lay.link_slots[i];
                snap.links.push_back({slot.fact, slot.subject_id, slot.object_id});
            }
            yield(snap);
            ++result.count;

            size_t i = digits.size();
            while (i-- > 0) {
                if (++digits[i] < lay.radices[i]) break;
                digits[i] = 0;
            }
            if (i == static_cast<size_t>(-1)) break; // odometer wrapped
            continue;
        }
    } while (counts.advance());
    return result;
}

} // namespace sbvr2ocl
