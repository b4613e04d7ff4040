#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "jstc/constraint.hpp"
#include "jstc/smtlib.hpp"

namespace jstc {

struct Verdict {
    enum class Kind { Sat, Unsat, Unknown };

    Kind kind = Kind::Unknown;
    std::vector<std::size_t> core; // Unsat: minimal conflicting item indices
    std::string reason;            // Unknown only

    static Verdict sat() { return {Kind::Sat, {}, {}}; }
    static Verdict unsat(std::vector<std::size_t> core) {
        return {Kind::Unsat, std::move(core), {}};
    }
    static Verdict unknown(std::string reason) { return {Kind::Unknown, {}, std::move(reason)}; }

    bool is_sat() const { return kind == Kind::Sat; }
    bool is_unsat() const { return kind == Kind::Unsat; }
};

const char* to_string(Verdict::Kind k);

enum class Backend { Builtin, External, Both };

struct SolverConfig {
    Backend backend = Backend::Builtin;
    std::string external_cmd;            // whitespace-split argv; script path appended
    std::chrono::milliseconds timeout{10000};
};

/// Satisfiability of the enabled subset of `store` without core
/// extraction: union-find over term ids, SameType unions classes, HasType
/// labels them, conflict means one class with two labels. Sound and
/// complete for the emitted fragment.
/// `enabled`, when given, masks items by index (same length as the store).
bool satisfiable(const ConstraintStore& store, const std::vector<bool>* enabled = nullptr);

/// Total decision procedure; never Unknown. Unsat verdicts carry a
/// 1-minimal core.
Verdict solve_builtin(const ConstraintStore& store);

/// Deletion-based minimization: walk the items, drop one, keep it only if
/// the rest becomes satisfiable. Requires the store to be unsatisfiable.
std::vector<std::size_t> shrink_core(const ConstraintStore& store);

/// Runs `config.external_cmd <script-file>` and reads the first output
/// token: sat / unsat / unknown. When `store_for_core` is given, unsat
/// results carry a minimal core computed by the builtin checker.
/// Throws SolveError for a missing binary, a timeout, or output that
/// starts with anything else.
Verdict solve_external(const SmtScript& script, const SolverConfig& config,
                       const ConstraintStore* store_for_core = nullptr);

/// Backend dispatcher. Backend::Both runs builtin and external and throws
/// SolveError{BackendMismatch} when both are decisive but disagree.
Verdict solve(const ConstraintStore& store, const SolverConfig& config);

} // namespace jstc
