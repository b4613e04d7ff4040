#pragma once

#include <optional>

#include "jstc/ast.hpp"
#include "jstc/constraint.hpp"

namespace jstc {

/// Result of visiting an expression: the term standing for its value (also
/// left on the store's term stack) and its basic type when one is already
/// determined. Reading a variable whose type is not pinned yet yields
/// nullopt.
struct ExprResult {
    TermRef term;
    std::optional<BasicType> type;
};

/// Single-pass visitor that turns a behaviour tree into declarations and
/// assertions. Each visit_* method implements one typing rule; the store
/// threads the typing environment through the traversal.
///
/// Deterministic by construction: equal inputs produce identical stores,
/// including minted ids.
class ConstraintGenerator {
public:
    explicit ConstraintGenerator(ConstraintStore& store) : store_(store) {}

    void visit(const Behaviour& behaviour);

    void visit_nil(const Behaviour& node);
    void visit_seq(const Behaviour::Seq& node);
    void visit_assign(const Behaviour::Assign& node, const SourceSpan& span);
    void visit_if(const Behaviour::If& node, const SourceSpan& span);
    void visit_while(const Behaviour::While& node, const SourceSpan& span);
    void visit_println(const Behaviour::Println& node, const SourceSpan& span);

    /// Appends the expression's constraints per operator, pushes its term
    /// on the stack and returns it together with the inferred type.
    ExprResult visit_expr(const Expr& expr);

    /// Canonical term for a variable path. All-static paths map to the
    /// dot-joined name, declared once (each prefix too, it is a tree node
    /// of its own). A path with any dynamic key first visits the key
    /// expressions and then mints a fresh per-occurrence term, so distinct
    /// occurrences never interfere.
    TermRef resolve_path(const VarPath& path);

private:
    ConstraintStore& store_;
};

/// Whole-program entry point: visits `p.main` on a fresh store.
ConstraintStore check_program(const SourceProgram& p);

} // namespace jstc
