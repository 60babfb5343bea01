#include "sbvr2ocl/token.hpp"

#include <array>

namespace sbvr2ocl {

std::string fold_case(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out += (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c;
    return out;
}

namespace {

// Longest phrases first; matching stops at the first hit.
constexpr std::array<std::string_view, 27> kKeywordPhrases{
    "it is not the case that",
    "it is necessary that",
    "it is impossible that",
    "it is obligatory that",
    "it is prohibited that",
    "is greater than",
    "is less than",
    "is equal to",
    "is at least",
    "is at most",
    "at least one",
    "greater than",
    "less than",
    "equal to",
    "at least",
    "at most",
    "more than",
    "only if",
    "exactly",
    "each",
    "some",
    "an",
    "a",
    "no",
    "and",
    "or",
    "if",
};
// "then", "the", "of" are also keywords; kept separate to preserve the
// longest-first ordering above without interleaving.
constexpr std::array<std::string_view, 3> kKeywordSingles{"then", "the", "of"};

bool is_word_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_word_char(char c) {
    return is_word_start(c) || (c >= '0' && c <= '9') || c == '-';
}
bool is_punct(char c) {
    return c == ',' || c == ';' || c == ':' || c == '(' || c == ')' || c == '\'' || c == '-';
}

size_t phrase_words(std::string_view phrase) {
    size_t n = 1;
    for (char c : phrase)
        if (c == ' ') ++n;
    return n;
}

} // namespace

TokenizeResult tokenize(std::string_view source) {
    TokenizeResult result;
    std::vector<Token> raw;

    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (source[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        t.offset = int(i);
        if (c == '.') {
            t.kind = TokenKind::Period;
            t.text = ".";
            advance(1);
        } else if (c == '"') {
            size_t j = i + 1;
            while (j < source.size() && source[j] != '"' && source[j] != '\n') ++j;
            if (j >= source.size() || source[j] != '"') {
                result.diagnostics.push_back({Severity::Error, "E_BAD_CHAR",
                                              "unterminated string literal", line, col});
                advance(j - i);
                continue;
            }
            t.kind = TokenKind::StringLiteral;
            t.text = std::string(source.substr(i, j - i + 1));
            advance(j - i + 1);
        } else if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < source.size() && source[j] >= '0' && source[j] <= '9') ++j;
            t.kind = TokenKind::Number;
            t.text = std::string(source.substr(i, j - i));
            advance(j - i);
        } else if (is_word_start(c)) {
            size_t j = i;
            while (j < source.size() && is_word_char(source[j])) ++j;
            t.kind = TokenKind::Word;
            t.text = std::string(source.substr(i, j - i));
            advance(j - i);
        } else if (is_punct(c)) {
            t.kind = TokenKind::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            // Consume a full UTF-8 sequence so the diagnostic names one character.
            size_t j = i + 1;
            while (j < source.size() && (static_cast<unsigned char>(source[j]) & 0xC0) == 0x80) ++j;
            result.diagnostics.push_back({Severity::Error, "E_BAD_CHAR",
                                          "character not allowed here: '" +
                                              std::string(source.substr(i, j - i)) + "'",
                                          line, col});
            t.kind = TokenKind::Punct;
            t.text = std::string(source.substr(i, j - i));
            advance(j - i);
        }
        raw.push_back(std::move(t));
    }

    // Fold words into keyword phrases, longest first. The folded token keeps
    // the original spelling so the input can be reconstructed.
    auto folded_word = [&](size_t idx) -> std::string {
        return fold_case(raw[idx].text);
    };
    size_t p = 0;
    while (p < raw.size()) {
        if (raw[p].kind != TokenKind::Word) {
            result.tokens.push_back(raw[p]);
            ++p;
            continue;
        }
        bool matched = false;
        for (std::string_view phrase : kKeywordPhrases) {
            size_t n = phrase_words(phrase);
            if (p + n > raw.size()) continue;
            std::string joined;
            bool all_words = true;
            for (size_t k = 0; k < n; ++k) {
                if (raw[p + k].kind != TokenKind::Word) {
                    all_words = false;
                    break;
                }
                if (k) joined += ' ';
                joined += folded_word(p + k);
            }
            if (!all_words || joined != phrase) continue;
            Token t = raw[p];
            t.kind = TokenKind::KeywordPhrase;
            std::string original;
            for (size_t k = 0; k < n; ++k) {
                if (k) original += ' ';
                original += raw[p + k].text;
            }
            t.text = std::move(original);
            result.tokens.push_back(std::move(t));
            p += n;
            matched = true;
            break;
        }
        if (matched) continue;
        std::string low = folded_word(p);
        for (std::string_view kw : kKeywordSingles) {
            if (low == kw) {
                Token t = raw[p];
                t.kind = TokenKind::KeywordPhrase;
                result.tokens.push_back(std::move(t));
                matched = true;
                break;
            }
        }
        if (!matched) result.tokens.push_back(raw[p]);
        ++p;
    }
    return result;
}

} // namespace sbvr2ocl
