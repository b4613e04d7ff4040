#include "jstc/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "jstc/error.hpp"

namespace jstc {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Int: return "integer literal";
        case TokenKind::Double: return "double literal";
        case TokenKind::String: return "string literal";
        case TokenKind::KwMain: return "'main'";
        case TokenKind::KwIf: return "'if'";
        case TokenKind::KwElse: return "'else'";
        case TokenKind::KwWhile: return "'while'";
        case TokenKind::KwTrue: return "'true'";
        case TokenKind::KwFalse: return "'false'";
        case TokenKind::KwNullProcess: return "'nullProcess'";
        case TokenKind::Assign: return "'='";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Le: return "'<='";
        case TokenKind::Ge: return "'>='";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::NotEq: return "'!='";
        case TokenKind::AndAnd: return "'&&'";
        case TokenKind::OrOr: return "'||'";
        case TokenKind::Not: return "'!'";
        case TokenKind::Semi: return "';'";
        case TokenKind::Dot: return "'.'";
        case TokenKind::At: return "'@'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::Eof: return "end of input";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string_view, TokenKind> kKeywords = {
    {"main", TokenKind::KwMain},         {"if", TokenKind::KwIf},
    {"else", TokenKind::KwElse},         {"while", TokenKind::KwWhile},
    {"true", TokenKind::KwTrue},         {"false", TokenKind::KwFalse},
    {"nullProcess", TokenKind::KwNullProcess},
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
    Lexer(std::string_view source, const std::string& file) : src_(source), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_trivia();
            if (at_end()) break;
            tokens.push_back(next_token());
        }
        return tokens;
    }

private:
    struct Pos {
        std::size_t offset;
        int line;
        int col;
    };

    bool at_end() const { return offset_ >= src_.size(); }
    char peek() const { return src_[offset_]; }
    char peek2() const { return offset_ + 1 < src_.size() ? src_[offset_ + 1] : '\0'; }

    char advance() {
        char c = src_[offset_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    Pos mark() const { return {offset_, line_, col_}; }

    SourceSpan span_from(const Pos& start) const {
        // end position is the last consumed character, inclusive
        return SourceSpan{file_, start.line, start.col, line_, col_ > 1 ? col_ - 1 : 1};
    }

    Token make_token(TokenKind kind, std::string lexeme, const Pos& start) const {
        return Token{kind, std::move(lexeme), span_from(start)};
    }

    [[noreturn]] void fail(const std::string& message, const Pos& start) const {
        throw LexError(message, span_from(start));
    }

    void skip_trivia() {
        for (;;) {
            if (at_end()) return;
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && peek2() == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == '/' && peek2() == '*') {
                Pos start = mark();
                advance();
                advance();
                for (;;) {
                    if (at_end()) fail("unterminated block comment", start);
                    if (peek() == '*' && peek2() == '/') {
                        advance();
                        advance();
                        break;
                    }
                    advance();
                }
            } else {
                return;
            }
        }
    }

    Token next_token() {
        Pos start = mark();
        char c = advance();

        if (is_ident_start(c)) {
            std::string text(1, c);
            while (!at_end() && is_ident_char(peek())) text.push_back(advance());
            auto kw = kKeywords.find(text);
            return make_token(kw != kKeywords.end() ? kw->second : TokenKind::Ident,
                              std::move(text), start);
        }
        if (is_digit(c)) return number(c, start);
        if (c == '"') return string_literal(start);

        switch (c) {
            case '+': return make_token(TokenKind::Plus, "+", start);
            case '-': return make_token(TokenKind::Minus, "-", start);
            case '*': return make_token(TokenKind::Star, "*", start);
            case '/': return make_token(TokenKind::Slash, "/", start);
            case ';': return make_token(TokenKind::Semi, ";", start);
            case '.': return make_token(TokenKind::Dot, ".", start);
            case '@': return make_token(TokenKind::At, "@", start);
            case '(': return make_token(TokenKind::LParen, "(", start);
            case ')': return make_token(TokenKind::RParen, ")", start);
            case '{': return make_token(TokenKind::LBrace, "{", start);
            case '}': return make_token(TokenKind::RBrace, "}", start);
            case '<':
                if (!at_end() && peek() == '=') {
                    advance();
                    return make_token(TokenKind::Le, "<=", start);
                }
                return make_token(TokenKind::Lt, "<", start);
            case '>':
                if (!at_end() && peek() == '=') {
                    advance();
                    return make_token(TokenKind::Ge, ">=", start);
                }
                return make_token(TokenKind::Gt, ">", start);
            case '=':
                if (!at_end() && peek() == '=') {
                    advance();
                    return make_token(TokenKind::EqEq, "==", start);
                }
                return make_token(TokenKind::Assign, "=", start);
            case '!':
                if (!at_end() && peek() == '=') {
                    advance();
                    return make_token(TokenKind::NotEq, "!=", start);
                }
                return make_token(TokenKind::Not, "!", start);
            case '&':
                if (!at_end() && peek() == '&') {
                    advance();
                    return make_token(TokenKind::AndAnd, "&&", start);
                }
                fail("unknown character '&' (did you mean '&&'?)", start);
            case '|':
                if (!at_end() && peek() == '|') {
                    advance();
                    return make_token(TokenKind::OrOr, "||", start);
                }
                fail("unknown character '|' (did you mean '||'?)", start);
            default:
                break;
        }
        fail(std::string("unknown character '") + c + "'", start);
    }

    // int: digits; double: digits '.' digits. A dot not followed by a digit
    // belongs to a path (`a.b`), never to a number.
    Token number(char first, const Pos& start) {
        std::string text(1, first);
        while (!at_end() && is_digit(peek())) text.push_back(advance());
        if (!at_end() && peek() == '.' && offset_ + 1 < src_.size() && is_digit(src_[offset_ + 1])) {
            text.push_back(advance());
            while (!at_end() && is_digit(peek())) text.push_back(advance());
            return make_token(TokenKind::Double, std::move(text), start);
        }
        return make_token(TokenKind::Int, std::move(text), start);
    }

    Token string_literal(const Pos& start) {
        std::string text = "\"";
        for (;;) {
            if (at_end() || peek() == '\n') fail("unterminated string literal", start);
            char c = advance();
            text.push_back(c);
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail("unterminated string literal", start);
                char esc = advance();
                if (esc != '"' && esc != '\\') {
                    fail(std::string("invalid escape sequence '\\") + esc + "' in string", start);
                }
                text.push_back(esc);
            }
        }
        return make_token(TokenKind::String, std::move(text), start);
    }

    std::string_view src_;
    const std::string& file_;
    std::size_t offset_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    return Lexer(source, file).run();
}

} // namespace jstc
