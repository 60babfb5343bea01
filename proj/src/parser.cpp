#include "sbvr2ocl/parser.hpp"

#include <charconv>
#include <span>
#include <utility>

#include "sbvr2ocl/token.hpp"

namespace sbvr2ocl {

namespace {

struct ParseError {
    Diagnostic diag;
};

[[noreturn]] void fail(std::string code, std::string message, const Token& at) {
    throw ParseError{{Severity::Error, std::move(code), std::move(message), at.line, at.col}};
}

std::string fresh_var_name(int i) {
    static constexpr const char* kFirst[] = {"x", "y", "z", "w"};
    if (i < 4) return kFirst[i];
    return "v" + std::to_string(i + 1);
}

class SentenceParser {
public:
    SentenceParser(std::span<const Token> tokens, const Vocabulary& vocab, int index)
        : toks_(tokens), v_(vocab), index_(index) {}

    SbvrRule parse() {
        Modality modality = parse_modality();
        FormPtr body = parse_statement();
        if (pos_ < toks_.size())
            fail("E_SYNTAX", "unexpected '" + toks_[pos_].text + "' after the statement",
                 toks_[pos_]);
        SbvrRule rule;
        rule.index = index_;
        rule.modality = modality;
        rule.body = std::move(body);
        const Token& first = toks_.front();
        const Token& last = toks_.back();
        rule.span = {first.line, first.col,
                     last.offset + int(last.text.size()) - first.offset};
        return rule;
    }

private:
    std::span<const Token> toks_;
    const Vocabulary& v_;
    int index_ = 0;
    size_t pos_ = 0;
    int next_var_ = 0;
    std::vector<std::pair<std::string, ObjectTypeId>> scope_; // innermost at the back

    const Token* peek(size_t k = 0) const {
        return pos_ + k < toks_.size() ? &toks_[pos_ + k] : nullptr;
    }
    const Token& last_token() const { return toks_.back(); }

    [[noreturn]] void fail_here(std::string code, std::string message) {
        if (const Token* t = peek()) fail(std::move(code), std::move(message), *t);
        fail(std::move(code), std::move(message) + " (sentence ended)", last_token());
    }

    bool is_kw(const Token* t, std::string_view folded) const {
        return t && t->kind == TokenKind::KeywordPhrase && fold_case(t->text) == folded;
    }
    bool is_word(const Token* t) const { return t && t->kind == TokenKind::Word; }

    bool accept_kw(std::string_view folded) {
        if (is_kw(peek(), folded)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_kw(std::string_view folded, std::string_view what) {
        if (!accept_kw(folded)) fail_here("E_SYNTAX", "expected " + std::string(what));
    }

    Modality parse_modality() {
        const Token* t = peek();
        if (t && t->kind == TokenKind::KeywordPhrase) {
            std::string f = fold_case(t->text);
            Modality m;
            bool hit = true;
            if (f == "it is necessary that") m = Modality::Necessity;
            else if (f == "it is impossible that") m = Modality::Impossibility;
            else if (f == "it is obligatory that") m = Modality::Obligation;
            else if (f == "it is prohibited that") m = Modality::Prohibition;
            else hit = false;
            if (hit) {
                ++pos_;
                return m;
            }
        }
        fail_here("E_SYNTAX",
                  "expected a modality phrase such as 'It is necessary that' at the start of the "
                  "sentence");
    }

    FormPtr parse_statement() {
        if (accept_kw("if")) {
            FormPtr premise = parse_clause();
            expect_kw("then", "'then'");
            FormPtr conclusion = parse_clause();
            return mk_implies(std::move(premise), std::move(conclusion));
        }
        // clause { ("and" | "or") clause }, left-associative, "and" binds tighter.
        FormPtr left = parse_and_chain();
        while (accept_kw("or")) {
            FormPtr right = parse_and_chain();
            left = mk_or(std::move(left), std::move(right));
        }
        return left;
    }

    FormPtr parse_and_chain() {
        FormPtr left = parse_clause();
        while (accept_kw("and")) {
            FormPtr right = parse_clause();
            left = mk_and(std::move(left), std::move(right));
        }
        return left;
    }

    FormPtr parse_clause() {
        bool negated = accept_kw("it is not the case that");
        auto quant = parse_quantifier();
        if (!quant)
            fail_here("E_SYNTAX", "expected a quantifier such as 'each', 'a', or 'at least one'");
        ObjectTypeId type = parse_term_ref();
        std::string var = fresh_var_name(next_var_++);
        scope_.emplace_back(var, type);
        FormPtr pred = parse_predicate(var, type);
        scope_.pop_back();
        FormPtr f = mk_quant(quant->first, quant->second, var, type, std::move(pred));
        return negated ? mk_not(std::move(f)) : f;
    }

    // Returns (kind, n) when the next tokens form a quantifier; leaves the
    // position untouched otherwise.
    std::optional<std::pair<QuantKind, std::optional<int64_t>>> parse_quantifier() {
        const Token* t = peek();
        if (!t || t->kind != TokenKind::KeywordPhrase) return std::nullopt;
        std::string f = fold_case(t->text);
        auto plain = [&](QuantKind k) -> std::optional<std::pair<QuantKind, std::optional<int64_t>>> {
            ++pos_;
            return std::make_pair(k, std::optional<int64_t>{});
        };
        if (f == "each") return plain(QuantKind::Universal);
        if (f == "some" || f == "a" || f == "an" || f == "at least one")
            return plain(QuantKind::Existential);
        if (f == "no") return plain(QuantKind::None);
        QuantKind counted;
        if (f == "at least") counted = QuantKind::AtLeast;
        else if (f == "at most") counted = QuantKind::AtMost;
        else if (f == "exactly") counted = QuantKind::Exactly;
        else if (f == "more than") counted = QuantKind::MoreThan;
        else return std::nullopt;
        ++pos_;
        const Token* num = peek();
        if (!num || num->kind != TokenKind::Number)
            fail_here("E_SYNTAX", "expected a number after '" + t->text + "'");
        return std::make_pair(counted, std::optional<int64_t>{parse_number(*num)});
    }

    int64_t parse_number(const Token& t) {
        int64_t n = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc{} || p != t.text.data() + t.text.size())
            fail("E_SYNTAX", "number '" + t.text + "' is out of range", t);
        ++pos_;
        return n;
    }

    ObjectTypeId parse_term_ref() {
        const Token* t = peek();
        if (!is_word(t)) fail_here("E_SYNTAX", "expected a vocabulary term");
        auto type = v_.resolve_term(t->text);
        if (!type) fail("E_UNKNOWN_TERM", "unknown term '" + t->text + "'", *t);
        ++pos_;
        return *type;
    }

    FormPtr parse_predicate(const std::string& var, ObjectTypeId type) {
        const Token* t = peek();
        if (!is_word(t)) fail_here("E_SYNTAX", "expected a verb, 'is', or 'has'");
        std::string first = fold_case(t->text);

        if (first == "is" && is_word(peek(1))) return parse_characteristic_test(var, type);

        if (first == "has" && is_word(peek(1))) {
            const Token& attr_tok = *peek(1);
            if (v_.find_attribute(type, attr_tok.text)) return parse_attr_predicate(var, type);
            // "has <word> <cmp> <literal>" shaped like an attribute comparison,
            // but the word is not a declared attribute.
            if (is_numcmp(peek(2)) && is_literal(peek(3)))
                fail("E_UNKNOWN_ATTRIBUTE",
                     "no attribute '" + attr_tok.text + "' declared for term '" +
                         v_.object_type(type).term + "'",
                     attr_tok);
        }

        return parse_verb_predicate(var, type);
    }

    FormPtr parse_characteristic_test(const std::string& var, ObjectTypeId type) {
        const Token& is_tok = *peek();
        const Token& adj_tok = *peek(1);
        auto ch = v_.find_characteristic(type, adj_tok.text);
        if (!ch)
            fail("E_UNKNOWN_FACT",
                 "no characteristic '" + adj_tok.text + "' declared for term '" +
                     v_.object_type(type).term + "'",
                 is_tok);
        pos_ += 2;
        return mk_char_test(var, *ch);
    }

    bool is_numcmp(const Token* t) const {
        if (!t || t->kind != TokenKind::KeywordPhrase) return false;
        std::string f = fold_case(t->text);
        return f == "equal to" || f == "greater than" || f == "less than" || f == "at least" ||
               f == "at most";
    }
    bool is_literal(const Token* t) const {
        if (!t) return false;
        if (t->kind == TokenKind::Number || t->kind == TokenKind::StringLiteral) return true;
        if (t->kind == TokenKind::Word) {
            std::string f = fold_case(t->text);
            return f == "true" || f == "false";
        }
        return false;
    }

    FormPtr parse_attr_predicate(const std::string& var, ObjectTypeId type) {
        const Token& attr_tok = *peek(1);
        AttributeId attr = *v_.find_attribute(type, attr_tok.text);
        pos_ += 2;
        CmpOp op = parse_numcmp_op();
        Value lit = parse_literal();
        return mk_attr_cmp(var, attr, op, std::move(lit));
    }

    CmpOp parse_numcmp_op() {
        const Token* t = peek();
        if (t && t->kind == TokenKind::KeywordPhrase) {
            std::string f = fold_case(t->text);
            std::optional<CmpOp> op;
            if (f == "equal to") op = CmpOp::Eq;
            else if (f == "greater than") op = CmpOp::Gt;
            else if (f == "less than") op = CmpOp::Lt;
            else if (f == "at least") op = CmpOp::Ge;
            else if (f == "at most") op = CmpOp::Le;
            if (op) {
                ++pos_;
                return *op;
            }
        }
        fail_here("E_SYNTAX", "expected a comparison such as 'at least' or 'equal to'");
    }

    Value parse_literal() {
        const Token* t = peek();
        if (!t) fail_here("E_SYNTAX", "expected a literal value");
        if (t->kind == TokenKind::Number) return Value::integer(parse_number(*t));
        if (t->kind == TokenKind::StringLiteral) {
            std::string text = t->text.substr(1, t->text.size() - 2);
            ++pos_;
            return Value::string(std::move(text));
        }
        if (t->kind == TokenKind::Word) {
            std::string f = fold_case(t->text);
            if (f == "true" || f == "false") {
                ++pos_;
                return Value::boolean(f == "true");
            }
        }
        fail("E_SYNTAX", "expected a literal value, found '" + t->text + "'", *t);
    }

    FormPtr parse_verb_predicate(const std::string& var, ObjectTypeId type) {
        // Collect the run of plain words: the verb phrase, possibly followed by
        // an individual's name. A quantifier keyword ends the run.
        size_t run_begin = pos_;
        std::vector<const Token*> run;
        while (is_word(peek())) {
            run.push_back(peek());
            ++pos_;
        }
        if (run.empty()) fail_here("E_SYNTAX", "expected a verb");

        auto join = [&](size_t from, size_t to) {
            std::string s;
            for (size_t i = from; i < to; ++i) {
                if (i > from) s += ' ';
                s += run[i]->text;
            }
            return s;
        };

        // Case 1: "VERB quant TERM ..." — the whole run is the verb phrase.
        if (auto save = pos_; true) {
            auto quant = parse_quantifier();
            if (quant) {
                std::string verb = join(0, run.size());
                ObjectTypeId obj_type = parse_term_ref();
                auto fact = v_.find_fact(type, verb, obj_type);
                if (!fact)
                    fail("E_UNKNOWN_FACT",
                         "no fact type '" + v_.object_type(type).term + " " + verb + " " +
                             v_.object_type(obj_type).term + "'",
                         *run.front());
                std::string obj_var = fresh_var_name(next_var_++);
                scope_.emplace_back(obj_var, obj_type);
                FormPtr atom = mk_atomic(
                    *fact, {AtomArg::variable(var), AtomArg::variable(obj_var)});
                FormPtr inner = std::move(atom);
                if (accept_kw("only if")) {
                    FormPtr cond = parse_attrcond();
                    inner = mk_implies(std::move(inner), std::move(cond));
                }
                scope_.pop_back();
                return mk_quant(quant->first, quant->second, obj_var, obj_type,
                                std::move(inner));
            }
            pos_ = save;
        }

        // Case 2: "VERB INSTANCE" — the run splits into a verb phrase and an
        // individual's name; prefer the longest name (shortest verb).
        for (size_t verb_len = 1; verb_len + 1 <= run.size(); ++verb_len) {
            std::string name = join(verb_len, run.size());
            auto ind = v_.find_individual(name);
            if (!ind) continue;
            std::string verb = join(0, verb_len);
            ObjectTypeId obj_type = v_.individual(*ind).instance_of;
            auto fact = v_.find_fact(type, verb, obj_type);
            if (!fact)
                fail("E_UNKNOWN_FACT",
                     "no fact type '" + v_.object_type(type).term + " " + verb + " " +
                         v_.object_type(obj_type).term + "' (for individual '" + name + "')",
                     *run.front());
            FormPtr atom =
                mk_atomic(*fact, {AtomArg::variable(var), AtomArg::individual(*ind)});
            if (accept_kw("only if")) {
                FormPtr cond = parse_attrcond();
                return mk_implies(std::move(atom), std::move(cond));
            }
            return atom;
        }

        // Error diagnosis: nothing matched. Point at the most likely culprit.
        if (run.size() >= 2) {
            const Token& last = *run.back();
            if (auto obj_type = v_.resolve_term(last.text)) {
                std::string verb = join(0, run.size() - 1);
                if (v_.find_fact(type, verb, *obj_type))
                    fail("E_SYNTAX", "expected a quantifier before '" + last.text + "'", last);
                fail("E_UNKNOWN_FACT",
                     "no fact type '" + v_.object_type(type).term + " " + verb + " " +
                         v_.object_type(*obj_type).term + "'",
                     *run.front());
            }
            fail("E_UNKNOWN_TERM",
                 "cannot resolve '" + join(1, run.size()) + "' as a term or individual",
                 *run[1]);
        }
        pos_ = run_begin + run.size();
        fail("E_SYNTAX", "expected an object after verb '" + run.front()->text + "'",
             *run.front());
    }

    // "the ATTR of the TERM cmpop literal", where TERM names the nearest
    // enclosing bound variable of exactly that object type.
    FormPtr parse_attrcond() {
        expect_kw("the", "'the'");
        const Token* attr_tok = peek();
        if (!is_word(attr_tok)) fail_here("E_SYNTAX", "expected an attribute name");
        ++pos_;
        expect_kw("of", "'of'");
        expect_kw("the", "'the'");
        const Token* term_tok = peek();
        if (!is_word(term_tok)) fail_here("E_SYNTAX", "expected a vocabulary term");
        auto type = v_.resolve_term(term_tok->text);
        if (!type) fail("E_UNKNOWN_TERM", "unknown term '" + term_tok->text + "'", *term_tok);
        ++pos_;
        const std::string* bound = nullptr;
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->second == *type) {
                bound = &it->first;
                break;
            }
        }
        if (!bound)
            fail("E_SYNTAX",
                 "'the " + term_tok->text + "' does not refer to any quantified " +
                     v_.object_type(*type).term,
                 *term_tok);
        auto attr = v_.find_attribute(*type, attr_tok->text);
        if (!attr)
            fail("E_UNKNOWN_ATTRIBUTE",
                 "no attribute '" + attr_tok->text + "' declared for term '" +
                     v_.object_type(*type).term + "'",
                 *attr_tok);
        CmpOp op = parse_cmpop();
        Value lit = parse_literal();
        return mk_attr_cmp(*bound, *attr, op, std::move(lit));
    }

    CmpOp parse_cmpop() {
        const Token* t = peek();
        if (t && t->kind == TokenKind::KeywordPhrase) {
            std::string f = fold_case(t->text);
            std::optional<CmpOp> op;
            if (f == "is equal to") op = CmpOp::Eq;
            else if (f == "is greater than") op = CmpOp::Gt;
            else if (f == "is less than") op = CmpOp::Lt;
            else if (f == "is at least") op = CmpOp::Ge;
            else if (f == "is at most") op = CmpOp::Le;
            if (op) {
                ++pos_;
                return *op;
            }
        }
        fail_here("E_SYNTAX", "expected a comparison such as 'is at least'");
    }
};

} // namespace

ParseResult parse_rules(std::string_view source, const Vocabulary& v) {
    ParseResult result;
    TokenizeResult lexed = tokenize(source);
    result.diagnostics = lexed.diagnostics;

    size_t begin = 0;
    int ordinal = 0;
    auto handle_sentence = [&](size_t end, bool terminated) {
        if (end == begin) return; // empty stretch between periods
        ++ordinal;
        ++result.sentence_count;
        std::span<const Token> sentence(lexed.tokens.data() + begin, end - begin);
        try {
            if (!terminated) {
                const Token& last = sentence.back();
                throw ParseError{{Severity::Error, "E_SYNTAX",
                                  "expected '.' at the end of the sentence", last.line,
                                  last.col}};
            }
            SentenceParser parser(sentence, v, ordinal);
            result.rules.push_back(parser.parse());
        } catch (const ParseError& e) {
            result.diagnostics.push_back(e.diag);
            ++result.error_sentences;
        }
    };

    for (size_t i = 0; i < lexed.tokens.size(); ++i) {
        if (lexed.tokens[i].kind == TokenKind::Period) {
            handle_sentence(i, true);
            begin = i + 1;
        }
    }
    handle_sentence(lexed.tokens.size(), false);
    return result;
}

} // namespace sbvr2ocl
