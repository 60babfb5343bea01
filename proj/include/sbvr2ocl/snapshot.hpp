#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbvr2ocl/diag.hpp"
#include "sbvr2ocl/value.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct SnapshotObject {
    std::string id;
    ObjectTypeId type; // the object's exact type

    friend bool operator==(const SnapshotObject&, const SnapshotObject&) = default;
};

struct SnapshotAttr {
    std::string object_id;
    std::string attr;
    std::optional<Value> value; // nullopt records an explicitly missing value

    friend bool operator==(const SnapshotAttr&, const SnapshotAttr&) = default;
};

struct SnapshotLink {
    FactTypeId fact;
    std::string subject_id;
    std::string object_id;

    friend bool operator==(const SnapshotLink&, const SnapshotLink&) = default;
};

// A finite object population: objects with exact types, attribute values
// (possibly missing), and links between objects.
struct Snapshot {
    std::vector<SnapshotObject> objects;
    std::vector<SnapshotAttr> attrs;
    std::vector<SnapshotLink> links;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Parse the `.snap` format. Every referenced term, object id, attribute, and
// fact type must resolve; violations are reported with positions.
LoadResult<Snapshot> load_snapshot(std::string_view source, const Vocabulary& v);

// Canonical rendering; load_snapshot(print_snapshot(s)) reproduces s, and the
// bytes are compared before/after evaluation to pin down side-effect freedom.
std::string print_snapshot(const Snapshot& s, const Vocabulary& v);

} // namespace sbvr2ocl
