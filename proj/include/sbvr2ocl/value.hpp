#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace sbvr2ocl {

enum class ValueType { Integer, String, Boolean };

std::string to_string(ValueType t);

// A typed literal: attribute values in snapshots and literals in rules.
struct Value {
    std::variant<int64_t, std::string, bool> v;

    static Value integer(int64_t i) { return Value{i}; }
    static Value string(std::string s) { return Value{std::move(s)}; }
    static Value boolean(bool b) { return Value{b}; }

    ValueType type() const {
        switch (v.index()) {
        case 0: return ValueType::Integer;
        case 1: return ValueType::String;
        default: return ValueType::Boolean;
        }
    }

    int64_t as_int() const { return std::get<int64_t>(v); }
    const std::string& as_string() const { return std::get<std::string>(v); }
    bool as_bool() const { return std::get<bool>(v); }

    friend bool operator==(const Value&, const Value&) = default;
};

// Renders a value the way rule files spell literals: 3, "a", true.
std::string to_literal_text(const Value& val);

} // namespace sbvr2ocl
