#pragma once

#include <string>
#include <vector>

#include "faasforge/syntax/ast.hpp"
#include "faasforge/syntax/span.hpp"

namespace faasforge::syntax {

/// A grammar feature outside the supported subset, found in a parsed tree.
struct SubsetViolation {
    SourceSpan span;
    std::string construct;
    std::string message;
};

/// Collect every Unsupported node in the tree, sorted by span.
/// An empty result means the tree is entirely inside the subset.
std::vector<SubsetViolation> check_subset(const SyntaxTree& tree);

} // namespace faasforge::syntax
