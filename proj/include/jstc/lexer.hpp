#pragma once

#include <string_view>
#include <vector>

#include "jstc/token.hpp"

namespace jstc {

/// Splits `source` into tokens. Whitespace and comments (`//` to end of
/// line, `/* */`) are discarded; every token carries a span into `file`.
/// The trailing Eof token is included.
/// Throws LexError for an unterminated string or comment, an invalid
/// string escape, or a character outside the language.
std::vector<Token> tokenize(std::string_view source, const std::string& file);

} // namespace jstc
