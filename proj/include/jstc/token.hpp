#pragma once

#include <string>
#include <vector>

#include "jstc/source_span.hpp"

namespace jstc {

enum class TokenKind {
    Ident,
    Int,
    Double,
    String, // lexeme keeps the quotes and escapes exactly as written
    KwMain,
    KwIf,
    KwElse,
    KwWhile,
    KwTrue,
    KwFalse,
    KwNullProcess,
    Assign,    // =
    Plus,      // +
    Minus,     // -
    Star,      // *
    Slash,     // /
    Lt,        // <
    Gt,        // >
    Le,        // <=
    Ge,        // >=
    EqEq,      // ==
    NotEq,     // !=
    AndAnd,    // &&
    OrOr,      // ||
    Not,       // !
    Semi,      // ;
    Dot,       // .
    At,        // @
    LParen,    // (
    RParen,    // )
    LBrace,    // {
    RBrace,    // }
    Eof,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    SourceSpan span;
};

const char* token_kind_name(TokenKind kind);

} // namespace jstc
