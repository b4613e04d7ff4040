#pragma once

#include <string>

#include "jstc/ast.hpp"

namespace jstc {

/// Canonical source rendering. Reparsing the result yields an AST that is
/// same_shape-equal to the input; binary expressions are fully
/// parenthesized so no precedence information is lost.
std::string pretty(const SourceProgram& program);
std::string pretty(const Behaviour& behaviour, int indent = 0);
std::string pretty(const Expr& expr);
std::string pretty(const VarPath& path);

} // namespace jstc
