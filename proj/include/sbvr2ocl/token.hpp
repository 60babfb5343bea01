#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbvr2ocl/diag.hpp"

namespace sbvr2ocl {

enum class TokenKind { KeywordPhrase, Word, Number, StringLiteral, Period, Punct };

struct Token {
    TokenKind kind = TokenKind::Word;
    std::string text; // original spelling; keyword phrases keep source casing
    int line = 1;
    int col = 1;
    int offset = 0; // byte offset into the source
};

struct TokenizeResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics; // E_BAD_CHAR entries
};

// Splits rule text into tokens. '#' starts a comment to end of line. Keyword
// phrases are matched case-insensitively and longest-first, so "at least one"
// is a single token while "at least 2" yields "at least" plus a number.
TokenizeResult tokenize(std::string_view source);

// Lowercased text, for case-insensitive keyword comparison.
std::string fold_case(std::string_view s);

} // namespace sbvr2ocl
