#pragma once

#include <string>
#include <string_view>

namespace jstc::smtlite {

/// Decides a ground SMT-LIB2 script over uninterpreted sorts, constants,
/// unary functions, define-fun macros, `=` and `distinct`: the fragment
/// the renderer emits, parsed back from text and solved by congruence
/// closure. Deliberately shares nothing with the store-level checker so
/// the two can be run against each other.
///
/// Returns "sat", "unsat", or "unknown". Unknown covers scripts outside
/// the fragment and malformed input alike, with the reason in *why when
/// given; the function itself never throws on bad scripts.
std::string check_script(std::string_view text, std::string* why = nullptr);

} // namespace jstc::smtlite
