#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbvr2ocl/mapper.hpp"
#include "sbvr2ocl/sbvr_ast.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct FeatureRow {
    std::string feature;
    bool sbvr_supported = false;
    bool ocl_supported = false;
    uint64_t usage_count = 0; // rules (or emitted constraints) using the feature
};

struct FeatureMatrix {
    std::vector<FeatureRow> rows;
};

// Tabulates which language features each side supports and how often the
// given rules use them. `outcomes` holds the mapping result for each rule,
// aligned by position. A feature the source language lacks always counts
// zero uses; one the target lacks counts the source-side uses that failed
// to map.
FeatureMatrix build_feature_matrix(const std::vector<SbvrRule>& rules,
                                   const std::vector<MapResult>& outcomes, const Vocabulary& v);

// Fixed-width text table, one row per feature.
std::string render_feature_matrix_text(const FeatureMatrix& fm);

// {"version":1,"rows":[{"feature":...,"sbvr_supported":...,"ocl_supported":...,
// "usage_count":...},...]} with keys and rows in a stable order.
std::string render_feature_matrix_json(const FeatureMatrix& fm);

} // namespace sbvr2ocl
