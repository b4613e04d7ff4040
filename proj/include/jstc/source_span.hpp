#pragma once

#include <cstdint>
#include <string>

namespace jstc {

/// Half-open in spirit but stored as inclusive 1-based endpoints, the way
/// editors and diagnostics expect them.
struct SourceSpan {
    std::string file;
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    bool contains(const SourceSpan& inner) const {
        auto before = [](int l1, int c1, int l2, int c2) {
            return l1 < l2 || (l1 == l2 && c1 <= c2);
        };
        return before(start_line, start_col, inner.start_line, inner.start_col) &&
               before(inner.end_line, inner.end_col, end_line, end_col);
    }

    /// Smallest span covering both endpoints. Files are assumed equal.
    static SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
        SourceSpan s;
        s.file = a.file;
        if (a.start_line < b.start_line ||
            (a.start_line == b.start_line && a.start_col <= b.start_col)) {
            s.start_line = a.start_line;
            s.start_col = a.start_col;
        } else {
            s.start_line = b.start_line;
            s.start_col = b.start_col;
        }
        if (a.end_line > b.end_line || (a.end_line == b.end_line && a.end_col >= b.end_col)) {
            s.end_line = a.end_line;
            s.end_col = a.end_col;
        } else {
            s.end_line = b.end_line;
            s.end_col = b.end_col;
        }
        return s;
    }
};

inline bool operator==(const SourceSpan& a, const SourceSpan& b) {
    return a.file == b.file && a.start_line == b.start_line && a.start_col == b.start_col &&
           a.end_line == b.end_line && a.end_col == b.end_col;
}

inline std::string to_string(const SourceSpan& s) {
    return s.file + ":" + std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
}

} // namespace jstc
