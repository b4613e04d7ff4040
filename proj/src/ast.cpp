#include "jstc/ast.hpp"

namespace jstc {

bool same_shape(const VarPath& a, const VarPath& b) {
    if (a.segments.size() != b.segments.size()) return false;
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
        const PathSegment& sa = a.segments[i];
        const PathSegment& sb = b.segments[i];
        if (sa.is_dynamic() != sb.is_dynamic()) return false;
        if (sa.is_dynamic()) {
            if (!same_shape(*sa.key, *sb.key)) return false;
        } else if (sa.name != sb.name) {
            return false;
        }
    }
    return true;
}

bool same_shape(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Literal>(&a.node)) {
        const auto& lb = std::get<Literal>(b.node);
        return la->kind == lb.kind && la->lexeme == lb.lexeme;
    }
    if (const auto* pa = std::get_if<Expr::PathRead>(&a.node)) {
        return same_shape(pa->path, std::get<Expr::PathRead>(b.node).path);
    }
    if (const auto* ba = std::get_if<Expr::Binary>(&a.node)) {
        const auto& bb = std::get<Expr::Binary>(b.node);
        return ba->op == bb.op && same_shape(*ba->lhs, *bb.lhs) && same_shape(*ba->rhs, *bb.rhs);
    }
    const auto& ua = std::get<Expr::Unary>(a.node);
    const auto& ub = std::get<Expr::Unary>(b.node);
    return ua.op == ub.op && same_shape(*ua.operand, *ub.operand);
}

bool same_shape(const Behaviour& a, const Behaviour& b) {
    if (a.node.index() != b.node.index()) return false;
    if (std::holds_alternative<Behaviour::Nil>(a.node)) return true;
    if (const auto* sa = std::get_if<Behaviour::Seq>(&a.node)) {
        const auto& sb = std::get<Behaviour::Seq>(b.node);
        return same_shape(*sa->first, *sb.first) && same_shape(*sa->second, *sb.second);
    }
    if (const auto* aa = std::get_if<Behaviour::Assign>(&a.node)) {
        const auto& ab = std::get<Behaviour::Assign>(b.node);
        return same_shape(aa->target, ab.target) && same_shape(*aa->value, *ab.value);
    }
    if (const auto* ia = std::get_if<Behaviour::If>(&a.node)) {
        const auto& ib = std::get<Behaviour::If>(b.node);
        if (!same_shape(*ia->cond, *ib.cond)) return false;
        if (!same_shape(*ia->then_branch, *ib.then_branch)) return false;
        if ((ia->else_branch == nullptr) != (ib.else_branch == nullptr)) return false;
        return ia->else_branch == nullptr || same_shape(*ia->else_branch, *ib.else_branch);
    }
    if (const auto* wa = std::get_if<Behaviour::While>(&a.node)) {
        const auto& wb = std::get<Behaviour::While>(b.node);
        return same_shape(*wa->cond, *wb.cond) && same_shape(*wa->body, *wb.body);
    }
    const auto& pa = std::get<Behaviour::Println>(a.node);
    const auto& pb = std::get<Behaviour::Println>(b.node);
    return same_shape(*pa.arg, *pb.arg);
}

bool same_shape(const SourceProgram& a, const SourceProgram& b) {
    return same_shape(*a.main, *b.main);
}

} // namespace jstc
