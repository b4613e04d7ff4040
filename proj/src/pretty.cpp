#include "jstc/pretty.hpp"

#include <sstream>

namespace jstc {

namespace {

std::string indent_of(int level) { return std::string(static_cast<std::size_t>(level) * 4, ' '); }

} // namespace

std::string pretty(const VarPath& path) {
    std::string out;
    for (std::size_t i = 0; i < path.segments.size(); ++i) {
        const PathSegment& seg = path.segments[i];
        if (i > 0) out += ".";
        if (seg.is_dynamic()) {
            out += "(" + pretty(*seg.key) + ")";
        } else {
            out += seg.name;
        }
    }
    return out;
}

std::string pretty(const Expr& expr) {
    if (const auto* lit = std::get_if<Literal>(&expr.node)) {
        return lit->lexeme;
    }
    if (const auto* read = std::get_if<Expr::PathRead>(&expr.node)) {
        return pretty(read->path);
    }
    if (const auto* bin = std::get_if<Expr::Binary>(&expr.node)) {
        return "(" + pretty(*bin->lhs) + " " + binary_op_symbol(bin->op) + " " +
               pretty(*bin->rhs) + ")";
    }
    const auto& un = std::get<Expr::Unary>(expr.node);
    return std::string(unary_op_symbol(un.op)) + "(" + pretty(*un.operand) + ")";
}

std::string pretty(const Behaviour& behaviour, int indent) {
    const std::string pad = indent_of(indent);
    if (std::holds_alternative<Behaviour::Nil>(behaviour.node)) {
        return pad + "nullProcess";
    }
    if (const auto* seq = std::get_if<Behaviour::Seq>(&behaviour.node)) {
        return pretty(*seq->first, indent) + ";\n" + pretty(*seq->second, indent);
    }
    if (const auto* assign = std::get_if<Behaviour::Assign>(&behaviour.node)) {
        return pad + pretty(assign->target) + " = " + pretty(*assign->value);
    }
    if (const auto* cond = std::get_if<Behaviour::If>(&behaviour.node)) {
        std::string out = pad + "if ( " + pretty(*cond->cond) + " ) {\n" +
                          pretty(*cond->then_branch, indent + 1) + "\n" + pad + "}";
        if (cond->else_branch) {
            out += " else {\n" + pretty(*cond->else_branch, indent + 1) + "\n" + pad + "}";
        }
        return out;
    }
    if (const auto* loop = std::get_if<Behaviour::While>(&behaviour.node)) {
        return pad + "while ( " + pretty(*loop->cond) + " ) {\n" + pretty(*loop->body, indent + 1) +
               "\n" + pad + "}";
    }
    const auto& println = std::get<Behaviour::Println>(behaviour.node);
    return pad + "println@Console( " + pretty(*println.arg) + " )()";
}

std::string pretty(const SourceProgram& program) {
    return "main\n{\n" + pretty(*program.main, 1) + "\n}\n";
}

} // namespace jstc
