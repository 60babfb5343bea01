#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sbvr2ocl/class_model.hpp"
#include "sbvr2ocl/mapper.hpp"
#include "sbvr2ocl/parser.hpp"
#include "sbvr2ocl/snapshot.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(SBVR2OCL_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline sbvr2ocl::Vocabulary load_vocab(const std::string& text) {
    auto r = sbvr2ocl::load_vocabulary(text);
    for (const auto& d : r.diagnostics) CAPTURE(sbvr2ocl::format_diagnostic(d));
    REQUIRE(r.ok());
    return *r.value;
}

inline sbvr2ocl::Vocabulary bank_vocab() { return load_vocab(read_file(data_path("bank.vocab"))); }

inline sbvr2ocl::ClassModel derive_model(const sbvr2ocl::Vocabulary& v) {
    auto r = sbvr2ocl::derive_class_model(v);
    for (const auto& d : r.diagnostics) CAPTURE(sbvr2ocl::format_diagnostic(d));
    REQUIRE(r.ok());
    return *r.value;
}

inline sbvr2ocl::SbvrRule parse_one(const std::string& sentence, const sbvr2ocl::Vocabulary& v) {
    auto r = sbvr2ocl::parse_rules(sentence, v);
    for (const auto& d : r.diagnostics) CAPTURE(sbvr2ocl::format_diagnostic(d));
    REQUIRE(r.ok());
    REQUIRE(r.rules.size() == 1);
    return r.rules.front();
}

inline sbvr2ocl::OclConstraint map_one(const std::string& sentence, const sbvr2ocl::Vocabulary& v,
                                       const sbvr2ocl::ClassModel& m) {
    auto rule = parse_one(sentence, v);
    auto mapped = sbvr2ocl::map_rule(rule, v, m);
    for (const auto& [code, msg] : mapped.errors) CAPTURE(code + ": " + msg);
    REQUIRE(mapped.ok());
    REQUIRE(mapped.constraint.has_value());
    return *mapped.constraint;
}

inline sbvr2ocl::Snapshot load_snap(const std::string& text, const sbvr2ocl::Vocabulary& v) {
    auto r = sbvr2ocl::load_snapshot(text, v);
    for (const auto& d : r.diagnostics) CAPTURE(sbvr2ocl::format_diagnostic(d));
    REQUIRE(r.ok());
    return *r.value;
}

} // namespace testutil
