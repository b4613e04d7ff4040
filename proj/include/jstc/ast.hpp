#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "jstc/source_span.hpp"

namespace jstc {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class LiteralKind { Int, Double, String, Bool };

/// A literal keeps its exact source text; strings include the quotes and
/// escapes as written.
struct Literal {
    LiteralKind kind;
    std::string lexeme;
    SourceSpan span;
};

/// One step of a variable path: either a static key (`animals`, `cat`) or a
/// dynamic key `( expr )` computed at runtime.
struct PathSegment {
    std::string name; // static key; empty for dynamic segments
    ExprPtr key;      // dynamic key expression; null for static segments
    SourceSpan span;

    bool is_dynamic() const { return key != nullptr; }
};

/// A variable is a path in the data tree. The first segment is always static.
struct VarPath {
    std::vector<PathSegment> segments;
    SourceSpan span;
};

enum class BinaryOp { Add, Sub, Mul, Div, Lt, Gt, Le, Ge, Eq, Ne, And, Or };
enum class UnaryOp { Not, Neg };

const char* binary_op_symbol(BinaryOp op);
const char* unary_op_symbol(UnaryOp op);

struct Expr {
    struct PathRead {
        VarPath path;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Unary {
        UnaryOp op;
        ExprPtr operand;
    };

    std::variant<Literal, PathRead, Binary, Unary> node;
    SourceSpan span;
};

struct Behaviour;
using BehaviourPtr = std::unique_ptr<Behaviour>;

struct Behaviour {
    struct Nil {};
    struct Seq {
        BehaviourPtr first;
        BehaviourPtr second; // parser right-associates: a;b;c == Seq(a, Seq(b, c))
    };
    struct Assign {
        VarPath target;
        ExprPtr value;
    };
    struct If {
        ExprPtr cond;
        BehaviourPtr then_branch;
        BehaviourPtr else_branch; // null when the else part is omitted
    };
    struct While {
        ExprPtr cond;
        BehaviourPtr body;
    };
    struct Println {
        ExprPtr arg;
    };

    std::variant<Nil, Seq, Assign, If, While, Println> node;
    SourceSpan span;
};

struct SourceProgram {
    BehaviourPtr main;
    std::string file;
};

/// Structural equality that ignores spans. Used by the reparse round-trip
/// tests and anywhere two independently created ASTs must be compared.
bool same_shape(const Expr& a, const Expr& b);
bool same_shape(const VarPath& a, const VarPath& b);
bool same_shape(const Behaviour& a, const Behaviour& b);
bool same_shape(const SourceProgram& a, const SourceProgram& b);

} // namespace jstc
