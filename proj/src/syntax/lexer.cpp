#include "faasforge/syntax/lexer.hpp"

#include <cctype>
#include <cstdlib>

#include "faasforge/syntax/source.hpp"

namespace faasforge::syntax {

namespace {

const char* kKeywords[] = {
    "def", "class", "return", "if", "elif", "else", "while", "for", "in",
    "global", "pass", "import", "and", "or", "not", "True", "False", "None",
    // recognized so the parser can name the violation instead of choking
    "lambda", "yield", "del", "try", "except", "finally", "raise", "with",
    "from", "as", "assert", "break", "continue", "nonlocal", "is",
};

bool is_keyword(const std::string& word) {
    for (const char* kw : kKeywords)
        if (word == kw)
            return true;
    return false;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        indents_.push_back(0);
        at_line_start_ = true;
        while (pos_ < text_.size())
            lex_one();
        finish();
        return std::move(tokens_);
    }

private:
    SourceSpan here(int length = 1) const {
        return SourceSpan{line_, column_, length};
    }

    char peek(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance(size_t n = 1) {
        for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    void push(TokenKind kind, std::string text, SourceSpan span) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.span = span;
        tokens_.push_back(std::move(t));
    }

    void lex_one() {
        if (at_line_start_ && bracket_depth_ == 0) {
            handle_indentation();
            if (pos_ >= text_.size())
                return;
        }
        char c = peek();
        if (c == '\n') {
            if (bracket_depth_ == 0 && !tokens_.empty() &&
                tokens_.back().kind != TokenKind::Newline &&
                tokens_.back().kind != TokenKind::Indent &&
                tokens_.back().kind != TokenKind::Dedent)
                push(TokenKind::Newline, "\n", here());
            advance();
            at_line_start_ = true;
            return;
        }
        if (c == '#') {
            while (pos_ < text_.size() && peek() != '\n')
                advance();
            return;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            advance();
            return;
        }
        at_line_start_ = false;
        if (is_ident_start(c)) {
            lex_word();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            lex_number();
            return;
        }
        if (c == '"' || c == '\'') {
            lex_string();
            return;
        }
        lex_operator();
    }

    void handle_indentation() {
        // Measure leading spaces of the next non-blank, non-comment line.
        while (true) {
            size_t scan = pos_;
            int width = 0;
            while (scan < text_.size() && text_[scan] == ' ') {
                ++width;
                ++scan;
            }
            if (scan < text_.size() && text_[scan] == '\t')
                throw ParseError(SourceSpan{line_, width + 1, 1}, "tab in indentation");
            if (scan >= text_.size())
                return; // trailing whitespace at EOF
            if (text_[scan] == '\n') { // blank line
                advance(scan - pos_ + 1);
                continue;
            }
            if (text_[scan] == '\r' && scan + 1 < text_.size() && text_[scan + 1] == '\n') {
                advance(scan - pos_ + 2);
                continue;
            }
            if (text_[scan] == '#') { // comment-only line
                while (scan < text_.size() && text_[scan] != '\n')
                    ++scan;
                advance(scan - pos_);
                return; // let lex_one consume the newline without a Newline token
            }
            advance(scan - pos_);
            apply_indent(width);
            at_line_start_ = false;
            return;
        }
    }

    void apply_indent(int width) {
        if (width > indents_.back()) {
            indents_.push_back(width);
            push(TokenKind::Indent, "", here(width));
            return;
        }
        while (width < indents_.back()) {
            indents_.pop_back();
            push(TokenKind::Dedent, "", here(1));
        }
        if (width != indents_.back())
            throw ParseError(here(1), "unindent does not match any outer indentation level");
    }

    void lex_word() {
        SourceSpan span = here();
        std::string word;
        while (pos_ < text_.size() && is_ident_char(peek())) {
            word += peek();
            advance();
        }
        span.length = static_cast<int>(word.size());
        if ((peek() == '"' || peek() == '\'') && word.size() <= 2)
            throw ParseError(span, "string literal prefixes are not supported");
        push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, word, span);
    }

    void lex_number() {
        SourceSpan span = here();
        std::string digits;
        bool is_float = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (peek() == '.' && peek(1) != '.') {
            is_float = true;
            digits += '.';
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
        }
        if (peek() == 'e' || peek() == 'E') {
            char sign = peek(1);
            size_t digit_at = (sign == '+' || sign == '-') ? 2 : 1;
            if (std::isdigit(static_cast<unsigned char>(peek(digit_at)))) {
                is_float = true;
                digits += peek();
                advance();
                if (sign == '+' || sign == '-') {
                    digits += peek();
                    advance();
                }
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    digits += peek();
                    advance();
                }
            }
        }
        span.length = static_cast<int>(digits.size());
        Token t;
        t.span = span;
        t.text = digits;
        if (is_float) {
            t.kind = TokenKind::FloatLiteral;
            t.float_value = std::strtod(digits.c_str(), nullptr);
        } else {
            t.kind = TokenKind::IntLiteral;
            t.int_value = BigInt(digits);
        }
        tokens_.push_back(std::move(t));
    }

    void lex_string() {
        SourceSpan span = here();
        char quote = peek();
        if (peek(1) == quote && peek(2) == quote)
            throw ParseError(span, "triple-quoted strings are not supported");
        advance();
        std::string value;
        while (true) {
            if (pos_ >= text_.size() || peek() == '\n')
                throw ParseError(span, "unterminated string literal");
            char c = peek();
            if (c == quote) {
                advance();
                break;
            }
            if (c == '\\') {
                advance();
                char esc = peek();
                switch (esc) {
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                case 'r': value += '\r'; break;
                case '\\': value += '\\'; break;
                case '\'': value += '\''; break;
                case '"': value += '"'; break;
                default:
                    throw ParseError(here(), std::string("unsupported escape sequence \\") + esc);
                }
                advance();
                continue;
            }
            value += c;
            advance();
        }
        span.length = column_ - span.column;
        Token t;
        t.kind = TokenKind::StringLiteral;
        t.text = std::move(value);
        t.span = span;
        tokens_.push_back(std::move(t));
    }

    void lex_operator() {
        static const char* three[] = {"**=", "//="};
        static const char* two[] = {"**", "//", "==", "!=", "<=", ">=",
                                    "+=", "-=", "*=", "/=", "%="};
        static const char one[] = "+-*/%<>=()[]{},:.@";

        SourceSpan span = here();
        for (const char* op : three) {
            if (text_.compare(pos_, 3, op) == 0) {
                span.length = 3;
                push(TokenKind::Operator, op, span);
                advance(3);
                return;
            }
        }
        for (const char* op : two) {
            if (text_.compare(pos_, 2, op) == 0) {
                span.length = 2;
                push(TokenKind::Operator, op, span);
                advance(2);
                return;
            }
        }
        char c = peek();
        for (char op : one) {
            if (c == op) {
                if (c == '(' || c == '[' || c == '{')
                    ++bracket_depth_;
                else if (c == ')' || c == ']' || c == '}')
                    bracket_depth_ = bracket_depth_ > 0 ? bracket_depth_ - 1 : 0;
                push(TokenKind::Operator, std::string(1, c), span);
                advance();
                return;
            }
        }
        throw ParseError(span, std::string("unexpected character '") + c + "'");
    }

    void finish() {
        if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline &&
            tokens_.back().kind != TokenKind::Dedent)
            push(TokenKind::Newline, "\n", here());
        while (indents_.size() > 1) {
            indents_.pop_back();
            push(TokenKind::Dedent, "", here());
        }
        push(TokenKind::EndOfFile, "", here());
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int bracket_depth_ = 0;
    bool at_line_start_ = true;
    std::vector<int> indents_;
    std::vector<Token> tokens_;
};

} // namespace

std::vector<Token> tokenize(const std::string& text) {
    return Lexer(text).run();
}

} // namespace faasforge::syntax
