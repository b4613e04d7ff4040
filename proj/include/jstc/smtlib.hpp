#pragma once

#include <string>
#include <string_view>

#include "jstc/constraint.hpp"

namespace jstc {

/// A solver-ready SMT-LIB2 script. `full()` is what gets written to disk:
/// preamble, then body (one line per store item, blank lines between
/// statement groups), then the check command.
struct SmtScript {
    std::string preamble;
    std::string body;
    std::string check_command;

    std::string full() const { return preamble + body + check_command; }
};

/// Sort and predicate declarations every script needs: sort Term, sort
/// Type with four pairwise-distinct constants, a total `typeOf` function,
/// and hasType/sameType defined over it. Defining the predicates through
/// one function keeps "one type per term" built in and the script
/// quantifier-free.
std::string render_preamble();

/// Deterministic rendering of a store. DeclareTerm becomes
/// `(declare-const <id> Term)`, HasType `(assert (hasType <id> <type>))`,
/// SameType `(assert (sameType <a> <b>))`.
SmtScript render(const ConstraintStore& store);

/// Writes `script.full()` as UTF-8 with LF endings. Throws IoError.
void write_script(const SmtScript& script, const std::string& path);

/// True when `s` is a legal SMT-LIB2 simple symbol (letters, digits and
/// + - / * = % ? ! . $ _ ~ & ^ < > @, not starting with a digit).
bool is_simple_symbol(std::string_view s);

/// Renders an id as a symbol, quoting with |...| when the plain form is
/// not a simple symbol.
std::string render_symbol(const std::string& id);

} // namespace jstc
