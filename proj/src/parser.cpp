#include "jstc/parser.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "jstc/error.hpp"
#include "jstc/lexer.hpp"

namespace jstc {

const char* binary_op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::And: return "&&";
        case BinaryOp::Or: return "||";
    }
    return "?";
}

const char* unary_op_symbol(UnaryOp op) {
    return op == UnaryOp::Not ? "!" : "-";
}

namespace {

/// Grammar, loosest to tightest:
///   program    := 'main' '{' behaviour '}'
///   behaviour  := statement (';' statement)*      -- right-associated Seq
///   statement  := 'nullProcess'
///              | 'if' '(' expr ')' block ('else' block)?
///              | 'while' '(' expr ')' block
///              | 'println' '@' 'Console' '(' expr ')' '(' ')'
///              | varpath '=' expr
///   block      := '{' behaviour '}'
///   expr       := or (precedence climbing: ||, &&, ==/!=, </>/<=/>=, +-, */, unary)
///   primary    := literal | varpath | '(' expr ')'
///   varpath    := ident ('.' (ident | '(' expr ')'))*
class Parser {
public:
    Parser(const std::vector<Token>& tokens, const std::string& file)
        : tokens_(tokens), file_(file) {
        SourceSpan end{file_, 1, 1, 1, 1};
        if (!tokens_.empty()) {
            const SourceSpan& last = tokens_.back().span;
            end = SourceSpan{file_, last.end_line, last.end_col, last.end_line, last.end_col};
        }
        eof_ = Token{TokenKind::Eof, "", end};
    }

    SourceProgram parse_program() {
        expect(TokenKind::KwMain, "program must start with 'main'");
        expect(TokenKind::LBrace, "expected '{' after 'main'");
        BehaviourPtr body = parse_behaviour();
        expect(TokenKind::RBrace, "expected '}' after behaviour");
        if (!at_end()) {
            fail("unexpected input after closing '}'");
        }
        return SourceProgram{std::move(body), file_};
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : eof_;
    }

    bool at_end() const { return pos_ >= tokens_.size(); }
    bool check(TokenKind kind) const { return peek().kind == kind; }

    const Token& advance() {
        const Token& t = peek();
        if (!at_end()) ++pos_;
        return t;
    }

    bool match(TokenKind kind) {
        if (check(kind)) {
            advance();
            return true;
        }
        return false;
    }

    const Token& expect(TokenKind kind, const std::string& what) {
        if (check(kind)) return advance();
        fail(what + " (got " + token_kind_name(peek().kind) + ")");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().span);
    }

    BehaviourPtr parse_behaviour() {
        BehaviourPtr first = parse_statement();
        if (!match(TokenKind::Semi)) return first;
        // `;` right-associates, so the tail is one recursive parse.
        if (check(TokenKind::RBrace)) {
            fail("expected statement after ';' (trailing ';' before '}' is not allowed)");
        }
        BehaviourPtr rest = parse_behaviour();
        SourceSpan span = SourceSpan::merge(first->span, rest->span);
        auto node = std::make_unique<Behaviour>();
        node->node = Behaviour::Seq{std::move(first), std::move(rest)};
        node->span = span;
        return node;
    }

    BehaviourPtr parse_statement() {
        switch (peek().kind) {
            case TokenKind::KwNullProcess: {
                const Token& t = advance();
                auto node = std::make_unique<Behaviour>();
                node->node = Behaviour::Nil{};
                node->span = t.span;
                return node;
            }
            case TokenKind::KwIf: return parse_if();
            case TokenKind::KwWhile: return parse_while();
            case TokenKind::Ident:
                if (peek(1).kind == TokenKind::At) return parse_println();
                return parse_assign();
            default:
                fail("expected a statement");
        }
    }

    BehaviourPtr parse_if() {
        const Token& kw = expect(TokenKind::KwIf, "expected 'if'");
        expect(TokenKind::LParen, "expected '(' after 'if'");
        ExprPtr cond = parse_expr();
        expect(TokenKind::RParen, "expected ')' after condition");
        BehaviourPtr then_branch = parse_block();
        BehaviourPtr else_branch;
        SourceSpan end = then_branch->span;
        if (match(TokenKind::KwElse)) {
            else_branch = parse_block();
            end = else_branch->span;
        }
        auto node = std::make_unique<Behaviour>();
        node->span = SourceSpan::merge(kw.span, end);
        node->node =
            Behaviour::If{std::move(cond), std::move(then_branch), std::move(else_branch)};
        return node;
    }

    BehaviourPtr parse_while() {
        const Token& kw = expect(TokenKind::KwWhile, "expected 'while'");
        expect(TokenKind::LParen, "expected '(' after 'while'");
        ExprPtr cond = parse_expr();
        expect(TokenKind::RParen, "expected ')' after condition");
        BehaviourPtr body = parse_block();
        auto node = std::make_unique<Behaviour>();
        node->span = SourceSpan::merge(kw.span, body->span);
        node->node = Behaviour::While{std::move(cond), std::move(body)};
        return node;
    }

    // The one built-in statement call. General operation invocation is not
    // part of the language.
    BehaviourPtr parse_println() {
        const Token& name = expect(TokenKind::Ident, "expected statement");
        if (name.lexeme != "println") {
            throw ParseError("unsupported operation call '" + name.lexeme +
                                 "' (only println@Console is available)",
                             name.span);
        }
        expect(TokenKind::At, "expected '@' after 'println'");
        const Token& target = expect(TokenKind::Ident, "expected 'Console' after '@'");
        if (target.lexeme != "Console") {
            throw ParseError("unsupported output port '" + target.lexeme +
                                 "' (only println@Console is available)",
                             target.span);
        }
        expect(TokenKind::LParen, "expected '(' after 'println@Console'");
        ExprPtr arg = parse_expr();
        expect(TokenKind::RParen, "expected ')' after argument");
        expect(TokenKind::LParen, "expected '(' for the empty reply of println@Console");
        const Token& close = expect(TokenKind::RParen, "expected ')' to close println@Console");
        auto node = std::make_unique<Behaviour>();
        node->span = SourceSpan::merge(name.span, close.span);
        node->node = Behaviour::Println{std::move(arg)};
        return node;
    }

    BehaviourPtr parse_assign() {
        VarPath target = parse_varpath();
        expect(TokenKind::Assign, "expected '=' in assignment");
        ExprPtr value = parse_expr();
        auto node = std::make_unique<Behaviour>();
        node->span = SourceSpan::merge(target.span, value->span);
        node->node = Behaviour::Assign{std::move(target), std::move(value)};
        return node;
    }

    BehaviourPtr parse_block() {
        expect(TokenKind::LBrace, "expected '{'");
        BehaviourPtr body = parse_behaviour();
        expect(TokenKind::RBrace, "expected '}'");
        return body;
    }

    VarPath parse_varpath() {
        const Token& head = expect(TokenKind::Ident, "expected variable path");
        VarPath path;
        path.segments.push_back(PathSegment{head.lexeme, nullptr, head.span});
        SourceSpan end = head.span;
        while (match(TokenKind::Dot)) {
            if (match(TokenKind::LParen)) {
                ExprPtr key = parse_expr();
                const Token& close = expect(TokenKind::RParen, "expected ')' after dynamic key");
                SourceSpan seg_span = SourceSpan::merge(key->span, close.span);
                path.segments.push_back(PathSegment{{}, std::move(key), seg_span});
                end = close.span;
            } else {
                const Token& seg = expect(TokenKind::Ident, "expected path segment after '.'");
                path.segments.push_back(PathSegment{seg.lexeme, nullptr, seg.span});
                end = seg.span;
            }
        }
        path.span = SourceSpan::merge(head.span, end);
        return path;
    }

    // Precedence, loosest to tightest: || < && < ==/!= < comparisons < +- < */ < unary.
    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (check(TokenKind::OrOr)) {
            advance();
            lhs = make_binary(BinaryOp::Or, std::move(lhs), parse_and());
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_equality();
        while (check(TokenKind::AndAnd)) {
            advance();
            lhs = make_binary(BinaryOp::And, std::move(lhs), parse_equality());
        }
        return lhs;
    }

    ExprPtr parse_equality() {
        ExprPtr lhs = parse_comparison();
        for (;;) {
            if (match(TokenKind::EqEq)) {
                lhs = make_binary(BinaryOp::Eq, std::move(lhs), parse_comparison());
            } else if (match(TokenKind::NotEq)) {
                lhs = make_binary(BinaryOp::Ne, std::move(lhs), parse_comparison());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_additive();
        for (;;) {
            BinaryOp op;
            if (match(TokenKind::Lt)) op = BinaryOp::Lt;
            else if (match(TokenKind::Gt)) op = BinaryOp::Gt;
            else if (match(TokenKind::Le)) op = BinaryOp::Le;
            else if (match(TokenKind::Ge)) op = BinaryOp::Ge;
            else return lhs;
            lhs = make_binary(op, std::move(lhs), parse_additive());
        }
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_multiplicative();
        for (;;) {
            if (match(TokenKind::Plus)) {
                lhs = make_binary(BinaryOp::Add, std::move(lhs), parse_multiplicative());
            } else if (match(TokenKind::Minus)) {
                lhs = make_binary(BinaryOp::Sub, std::move(lhs), parse_multiplicative());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_multiplicative() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (match(TokenKind::Star)) {
                lhs = make_binary(BinaryOp::Mul, std::move(lhs), parse_unary());
            } else if (match(TokenKind::Slash)) {
                lhs = make_binary(BinaryOp::Div, std::move(lhs), parse_unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        if (check(TokenKind::Not) || check(TokenKind::Minus)) {
            const Token& op = advance();
            ExprPtr operand = parse_unary();
            auto node = std::make_unique<Expr>();
            node->span = SourceSpan::merge(op.span, operand->span);
            node->node = Expr::Unary{op.kind == TokenKind::Not ? UnaryOp::Not : UnaryOp::Neg,
                                     std::move(operand)};
            return node;
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Int: return literal(LiteralKind::Int);
            case TokenKind::Double: return literal(LiteralKind::Double);
            case TokenKind::String: return literal(LiteralKind::String);
            case TokenKind::KwTrue:
            case TokenKind::KwFalse: return literal(LiteralKind::Bool);
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(TokenKind::RParen, "expected ')'");
                return inner;
            }
            case TokenKind::Ident: {
                VarPath path = parse_varpath();
                auto node = std::make_unique<Expr>();
                node->span = path.span;
                node->node = Expr::PathRead{std::move(path)};
                return node;
            }
            default:
                fail("expected an expression");
        }
    }

    ExprPtr literal(LiteralKind kind) {
        const Token& t = advance();
        auto node = std::make_unique<Expr>();
        node->span = t.span;
        node->node = Literal{kind, t.lexeme, t.span};
        return node;
    }

    ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
        auto node = std::make_unique<Expr>();
        node->span = SourceSpan::merge(lhs->span, rhs->span);
        node->node = Expr::Binary{op, std::move(lhs), std::move(rhs)};
        return node;
    }

    const std::vector<Token>& tokens_;
    const std::string& file_;
    Token eof_;
    std::size_t pos_ = 0;
};

} // namespace

SourceProgram parse(const std::vector<Token>& tokens, const std::string& file) {
    return Parser(tokens, file).parse_program();
}

SourceProgram parse_text(std::string_view source, const std::string& file) {
    return parse(tokenize(source, file), file);
}

SourceProgram parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read file", path);
    return parse_text(buffer.str(), path);
}

} // namespace jstc
