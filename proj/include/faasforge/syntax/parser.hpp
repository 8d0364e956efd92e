#pragma once

#include <string>

#include "faasforge/syntax/ast.hpp"

namespace faasforge::syntax {

/// Parse source text into a SyntaxTree. Throws ParseError on failure.
/// Recognized-but-unsupported constructs become Unsupported nodes and
/// are reported later by check_subset.
SyntaxTree parse(const std::string& text);

/// Parse a single expression (used for bench invocation labels).
ExprPtr parse_expression(const std::string& text);

} // namespace faasforge::syntax
