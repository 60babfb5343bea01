#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sbvr2ocl {

enum class Severity { Error, Warning };

// One diagnostic from a loader or the rule frontend. line/col are 1-based;
// 0 means "no position" (whole-input problems).
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    int line = 0;
    int col = 0;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format_diagnostic(const Diagnostic& d);

inline bool any_errors(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Severity::Error) return true;
    return false;
}

// Result of loading/deriving something that can fail with diagnostics.
// value is present exactly when no error-severity diagnostic was produced.
template <class T>
struct LoadResult {
    std::optional<T> value;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return value.has_value() && !any_errors(diagnostics); }
};

} // namespace sbvr2ocl
