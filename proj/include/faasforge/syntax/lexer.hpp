#pragma once

#include <string>
#include <vector>

#include "faasforge/syntax/ast.hpp"
#include "faasforge/syntax/span.hpp"

namespace faasforge::syntax {

enum class TokenKind {
    Identifier,
    Keyword,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    Operator, // punctuation and operators, lexeme in `text`
    Newline,
    Indent,
    Dedent,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;   // lexeme (decoded value for strings)
    BigInt int_value;   // IntLiteral
    double float_value = 0.0; // FloatLiteral
    SourceSpan span;
};

/// Tokenize source text. Indentation must be spaces; a tab in leading
/// whitespace is a lex error. Newlines inside brackets are ignored.
std::vector<Token> tokenize(const std::string& text);

} // namespace faasforge::syntax
