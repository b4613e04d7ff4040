#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jstc/ast.hpp"
#include "jstc/constraint.hpp"
#include "jstc/solver.hpp"

namespace jstc {

struct TypeErrorReport {
    std::string message;
    SourceSpan primary_span;
    std::vector<std::pair<SourceSpan, std::string>> related;
    std::pair<BasicType, BasicType> conflicting_types;
};

struct CheckStats {
    std::size_t constraint_count = 0;
    std::size_t term_count = 0;
    std::int64_t solve_millis = 0;
};

struct CheckReport {
    Verdict verdict;
    std::vector<TypeErrorReport> errors;
    std::string file;
    CheckStats stats;
};

/// Turns a verdict plus constraint provenance into located errors: one per
/// conflicting union-find class, the latest-span core constraint as the
/// primary location, the others as related notes. Extra conflicts beyond
/// the verdict's own core are found by masking reported cores and
/// re-solving, so independent errors all surface in one pass.
CheckReport report(const ConstraintStore& store, const Verdict& verdict,
                   const SourceProgram& program, CheckStats stats = {});

/// `<file>:<line>:<col>: error: type mismatch: <t1> vs <t2>` blocks with
/// indented related notes, in span order; `ok` for a clean report.
std::string format_text(const CheckReport& report);

/// One JSON object with fixed key order; byte-stable across runs.
std::string format_json(const CheckReport& report);

} // namespace jstc
