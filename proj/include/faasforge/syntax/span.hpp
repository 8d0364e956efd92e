#pragma once

namespace faasforge::syntax {

/// Location of a token or node in the original source text.
/// Lines and columns are 1-based; length counts characters.
struct SourceSpan {
    int line = 0;
    int column = 0;
    int length = 0;
};

inline bool operator==(const SourceSpan& a, const SourceSpan& b) {
    return a.line == b.line && a.column == b.column && a.length == b.length;
}

inline bool span_before(const SourceSpan& a, const SourceSpan& b) {
    if (a.line != b.line)
        return a.line < b.line;
    return a.column < b.column;
}

} // namespace faasforge::syntax
