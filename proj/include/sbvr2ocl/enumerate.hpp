#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sbvr2ocl/diag.hpp"
#include "sbvr2ocl/snapshot.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

// Bounds for exhaustive snapshot enumeration. The space is every combination
// of: an object count per type from 0 to max_per_class; one value per
// attribute slot drawn from the matching domain (plus "no value" when
// include_missing is set); and presence or absence of every possible link.
struct EnumOptions {
    int max_per_class = 2;
    std::vector<int64_t> int_domain = {0, 1, 2};
    std::vector<std::string> string_domain = {"a", "b"};
    bool include_missing = false;
    uint64_t cap = 10'000'000; // refuse to stream a larger space
};

struct SpaceSize {
    uint64_t count = 0;   // saturated at UINT64_MAX when overflow is set
    bool overflow = false;
};

// Size of the enumeration space, computed without enumerating it.
SpaceSize snapshot_space_size(const Vocabulary& v, const EnumOptions& opts);

struct EnumResult {
    uint64_t count = 0; // snapshots produced
    std::vector<Diagnostic> diagnostics;
    bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == Severity::Error) return false;
        return true;
    }
};

// Streams every snapshot in the space, in a fixed deterministic order:
// object-count vectors first (last-declared type varying fastest), then
// attribute slots in object order, then link slots per fact type in
// subject-major pair order. Object ids are the term plus a 1-based index
// ("customer1"). Reports E_TOO_LARGE without yielding anything when the
// space exceeds the cap.
EnumResult enumerate_snapshots(const Vocabulary& v, const EnumOptions& opts,
                               const std::function<void(const Snapshot&)>& yield);

} // namespace sbvr2ocl
