#pragma once

#include <string_view>
#include <vector>

#include "sbvr2ocl/diag.hpp"
#include "sbvr2ocl/sbvr_ast.hpp"
#include "sbvr2ocl/vocabulary.hpp"

namespace sbvr2ocl {

struct ParseResult {
    std::vector<SbvrRule> rules;
    std::vector<Diagnostic> diagnostics;
    // Sentence accounting for the error-recovery guarantee:
    // rules.size() + error_sentences == sentence_count.
    int sentence_count = 0;
    int error_sentences = 0;

    bool ok() const { return !any_errors(diagnostics); }
};

// Parse a rule file against the vocabulary. One rule per well-formed sentence,
// indexed by sentence ordinal (starting at 1). A sentence with an error yields
// a diagnostic instead of a rule; parsing resumes at the next sentence.
ParseResult parse_rules(std::string_view source, const Vocabulary& v);

} // namespace sbvr2ocl
