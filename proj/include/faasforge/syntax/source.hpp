#pragma once

#include <stdexcept>
#include <string>

#include "faasforge/syntax/ast.hpp"
#include "faasforge/syntax/span.hpp"

namespace faasforge::syntax {

/// Lex or parse failure, carrying the offending location.
class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message)
        : std::runtime_error(message), span_(span) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

/// One source file of the supported language subset.
struct SourceModule {
    std::string name; // file stem, ".py" stripped
    std::string text;
    SyntaxTree tree;
};

bool is_valid_module_name(const std::string& name);

/// Parse `text` into a SourceModule. Throws ParseError on lex/parse
/// failure and std::invalid_argument on a bad module name.
SourceModule load_module(const std::string& name, const std::string& text);

/// Read a `.py` file from disk; the module name is the file stem.
SourceModule load_module_file(const std::string& path);

} // namespace faasforge::syntax
