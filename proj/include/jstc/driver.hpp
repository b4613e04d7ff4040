#pragma once

#include <string>

#include "jstc/diagnostics.hpp"
#include "jstc/smtlib.hpp"
#include "jstc/solver.hpp"

namespace jstc {

/// Everything one checked file produces.
struct CheckOutcome {
    CheckReport report;
    SmtScript script;
};

/// parse -> generate -> render -> solve -> report for a single file.
/// Lex/parse/IO/solver-infrastructure failures propagate as exceptions;
/// type errors are data in the report.
CheckOutcome check_file(const std::string& path, const SolverConfig& config);

/// Same pipeline minus solving; used by --emit-smt without --solve.
SmtScript script_for_file(const std::string& path);

} // namespace jstc
