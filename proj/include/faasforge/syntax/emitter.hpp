#pragma once

#include <string>

#include "faasforge/syntax/ast.hpp"

namespace faasforge::syntax {

/// Re-emit a tree as source text: 4-space indentation, one blank line
/// before each top-level def/class/main guard, deterministic output.
/// parse(emit(t)) is structurally equal to t for trees free of
/// Unsupported nodes; emitting an Unsupported node throws.
std::string emit(const SyntaxTree& tree);

std::string emit_statement(const Stmt& stmt, int indent = 0);
std::string emit_expression(const Expr& expr);

/// Shortest round-trip text for a float literal, with a trailing
/// ".0" when the result would otherwise read as an integer.
std::string format_float(double value);

} // namespace faasforge::syntax
