#include "jstc/checker.hpp"

#include <stdexcept>

#include "jstc/error.hpp"

namespace jstc {

namespace {

LiteralKind literal_kind(const Literal& lit) { return lit.kind; }

BasicType literal_type(const Literal& lit) {
    switch (literal_kind(lit)) {
        case LiteralKind::Int: return BasicType::Int;
        case LiteralKind::Double: return BasicType::Double;
        case LiteralKind::String: return BasicType::String;
        case LiteralKind::Bool: return BasicType::Bool;
    }
    return BasicType::Int;
}

enum class OpClass { Arithmetic, Comparison, Equality, Logical };

OpClass op_class(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::Mul:
        case BinaryOp::Div: return OpClass::Arithmetic;
        case BinaryOp::Lt:
        case BinaryOp::Gt:
        case BinaryOp::Le:
        case BinaryOp::Ge: return OpClass::Comparison;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return OpClass::Equality;
        case BinaryOp::And:
        case BinaryOp::Or: return OpClass::Logical;
    }
    throw std::logic_error("unhandled binary operator");
}

} // namespace

void ConstraintGenerator::visit(const Behaviour& behaviour) {
    if (std::holds_alternative<Behaviour::Nil>(behaviour.node)) {
        visit_nil(behaviour);
    } else if (const auto* seq = std::get_if<Behaviour::Seq>(&behaviour.node)) {
        visit_seq(*seq);
    } else if (const auto* assign = std::get_if<Behaviour::Assign>(&behaviour.node)) {
        visit_assign(*assign, behaviour.span);
    } else if (const auto* cond = std::get_if<Behaviour::If>(&behaviour.node)) {
        visit_if(*cond, behaviour.span);
    } else if (const auto* loop = std::get_if<Behaviour::While>(&behaviour.node)) {
        visit_while(*loop, behaviour.span);
    } else if (const auto* println = std::get_if<Behaviour::Println>(&behaviour.node)) {
        visit_println(*println, behaviour.span);
    } else {
        throw GenError("behaviour has no typing rule", behaviour.span);
    }
}

// A nil behaviour leaves the environment untouched.
void ConstraintGenerator::visit_nil(const Behaviour&) {}

// Sequencing threads the store: the second component is checked against
// whatever the first one accumulated.
void ConstraintGenerator::visit_seq(const Behaviour::Seq& node) {
    visit(*node.first);
    visit(*node.second);
}

// target = value: the target's term and the value's term share one type,
// and when the value's type is already determined the target is pinned to
// it directly as well.
void ConstraintGenerator::visit_assign(const Behaviour::Assign& node, const SourceSpan& span) {
    TermRef target = resolve_path(node.target);
    store_.mark_group_break();
    ExprResult value = visit_expr(*node.value);
    TermRef value_term = store_.pop_term();
    Provenance p{"assign", span};
    store_.assert_same_type(target, value_term, p);
    if (value.type) {
        store_.assert_has_type(target, *value.type, p);
    }
}

// The condition must be boolean; both branches contribute to the same
// store, so a branch that retypes a variable conflicts there. An absent
// else branch is an empty behaviour.
void ConstraintGenerator::visit_if(const Behaviour::If& node, const SourceSpan&) {
    visit_expr(*node.cond);
    TermRef cond = store_.pop_term();
    store_.mark_group_break();
    store_.assert_has_type(cond, BasicType::Bool, Provenance{"if", node.cond->span});
    visit(*node.then_branch);
    if (node.else_branch) {
        visit(*node.else_branch);
    }
}

// Same shape as the conditional: boolean condition, body checked against
// the same store (a body that changes a variable's type is a conflict).
void ConstraintGenerator::visit_while(const Behaviour::While& node, const SourceSpan&) {
    visit_expr(*node.cond);
    TermRef cond = store_.pop_term();
    store_.mark_group_break();
    store_.assert_has_type(cond, BasicType::Bool, Provenance{"while", node.cond->span});
    visit(*node.body);
}

// println@Console accepts any basic type: only the argument's own
// expression constraints are kept.
void ConstraintGenerator::visit_println(const Behaviour::Println& node, const SourceSpan&) {
    visit_expr(*node.arg);
    store_.pop_term();
}

ExprResult ConstraintGenerator::visit_expr(const Expr& expr) {
    if (const auto* lit = std::get_if<Literal>(&expr.node)) {
        BasicType type = literal_type(*lit);
        TermRef term = store_.fresh_intermediate(expr.span);
        Provenance p{"literal", expr.span};
        store_.declare(term, p);
        store_.assert_has_type(term, type, p);
        store_.push_term(term);
        return {term, type};
    }

    if (const auto* read = std::get_if<Expr::PathRead>(&expr.node)) {
        TermRef term = resolve_path(read->path);
        store_.push_term(term);
        return {term, std::nullopt};
    }

    if (const auto* bin = std::get_if<Expr::Binary>(&expr.node)) {
        ExprResult lhs = visit_expr(*bin->lhs);
        ExprResult rhs = visit_expr(*bin->rhs);
        TermRef rhs_term = store_.pop_term();
        TermRef lhs_term = store_.pop_term();
        Provenance p{"binary", expr.span};

        switch (op_class(bin->op)) {
            case OpClass::Comparison:
            case OpClass::Equality: {
                store_.assert_same_type(lhs_term, rhs_term, p);
                TermRef term = store_.fresh_intermediate(expr.span);
                store_.declare(term, p);
                store_.assert_has_type(term, BasicType::Bool, p);
                store_.push_term(term);
                return {term, BasicType::Bool};
            }
            case OpClass::Arithmetic: {
                store_.assert_same_type(lhs_term, rhs_term, p);
                TermRef term = store_.fresh_intermediate(expr.span);
                store_.declare(term, p);
                store_.assert_same_type(term, lhs_term, p);
                store_.push_term(term);
                return {term, lhs.type ? lhs.type : rhs.type};
            }
            case OpClass::Logical: {
                store_.assert_has_type(lhs_term, BasicType::Bool, p);
                store_.assert_has_type(rhs_term, BasicType::Bool, p);
                TermRef term = store_.fresh_intermediate(expr.span);
                store_.declare(term, p);
                store_.assert_has_type(term, BasicType::Bool, p);
                store_.push_term(term);
                return {term, BasicType::Bool};
            }
        }
        throw GenError("expression has no typing rule", expr.span);
    }

    if (const auto* un = std::get_if<Expr::Unary>(&expr.node)) {
        ExprResult operand = visit_expr(*un->operand);
        TermRef operand_term = store_.pop_term();
        Provenance p{"unary", expr.span};
        TermRef term = store_.fresh_intermediate(expr.span);
        if (un->op == UnaryOp::Not) {
            store_.assert_has_type(operand_term, BasicType::Bool, p);
            store_.declare(term, p);
            store_.assert_has_type(term, BasicType::Bool, p);
            store_.push_term(term);
            return {term, BasicType::Bool};
        }
        store_.declare(term, p);
        store_.assert_same_type(term, operand_term, p);
        store_.push_term(term);
        return {term, operand.type};
    }

    throw GenError("expression has no typing rule", expr.span);
}

TermRef ConstraintGenerator::resolve_path(const VarPath& path) {
    // Leading static segments each stand for a tree node and get their own
    // term, declared on first use: `animals.cat` declares `animals` too.
    std::string name;
    std::size_t static_prefix_len = 0;
    std::vector<TermRef> prefix_terms;
    for (const PathSegment& seg : path.segments) {
        if (seg.is_dynamic()) break;
        name = name.empty() ? seg.name : name + "." + seg.name;
        ++static_prefix_len;
        TermRef term;
        term.id = name;
        term.origin_span = path.span;
        term.kind = TermKind::Variable;
        if (!store_.is_declared(term.id)) {
            store_.declare(term, Provenance{"path", path.span});
        }
        prefix_terms.push_back(std::move(term));
    }

    if (static_prefix_len == path.segments.size()) {
        return prefix_terms.back();
    }

    // Dynamic keys make the target unknowable statically: type-check the
    // key expressions, then mint a fresh per-occurrence term so this
    // occurrence cannot interfere with any other.
    for (std::size_t i = static_prefix_len; i < path.segments.size(); ++i) {
        const PathSegment& seg = path.segments[i];
        if (!seg.is_dynamic()) continue;
        visit_expr(*seg.key);
        store_.pop_term();
    }
    TermRef term = store_.fresh_dynamic_path(name, path.span);
    store_.declare(term, Provenance{"path", path.span});
    return term;
}

ConstraintStore check_program(const SourceProgram& p) {
    ConstraintStore store;
    ConstraintGenerator generator(store);
    generator.visit(*p.main);
    if (!store.term_stack().empty()) {
        throw std::logic_error("term stack not empty after program visit");
    }
    return store;
}

} // namespace jstc
