#pragma once

#include <string>
#include <vector>

#include "jstc/ast.hpp"
#include "jstc/token.hpp"

namespace jstc {

/// Recursive-descent parser over a token stream. The program shape is
/// `main { <behaviour> }`; `;` is the sequence operator and binds looser
/// than any statement, so `a;b;c` parses to Seq(a, Seq(b, c)).
/// Throws ParseError with the offending span and an expected-token note.
SourceProgram parse(const std::vector<Token>& tokens, const std::string& file);

/// tokenize + parse. Throws IoError when the file cannot be read.
SourceProgram parse_file(const std::string& path);

/// Same pipeline over in-memory text; `file` is used for spans only.
SourceProgram parse_text(std::string_view source, const std::string& file);

} // namespace jstc
