#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "jstc/error.hpp"
#include "jstc/parser.hpp"
#include "jstc/pretty.hpp"

#include "support.hpp"

using namespace jstc;

namespace {

SourceProgram parse_main(const std::string& behaviour_text) {
    return parse_text("main {\n" + behaviour_text + "\n}", "test.ol");
}

const Behaviour::Seq& as_seq(const Behaviour& b) { return std::get<Behaviour::Seq>(b.node); }
const Behaviour::Assign& as_assign(const Behaviour& b) {
    return std::get<Behaviour::Assign>(b.node);
}

/// Checks the span-containment invariant over the whole tree.
void check_spans_nested(const Behaviour& node, const SourceSpan& outer);

void check_expr_spans(const Expr& e, const SourceSpan& outer) {
    CHECK(outer.contains(e.span));
    if (const auto* bin = std::get_if<Expr::Binary>(&e.node)) {
        check_expr_spans(*bin->lhs, e.span);
        check_expr_spans(*bin->rhs, e.span);
    } else if (const auto* un = std::get_if<Expr::Unary>(&e.node)) {
        check_expr_spans(*un->operand, e.span);
    } else if (const auto* read = std::get_if<Expr::PathRead>(&e.node)) {
        CHECK(e.span.contains(read->path.span));
    }
}

void check_spans_nested(const Behaviour& node, const SourceSpan& outer) {
    CHECK(outer.contains(node.span));
    if (const auto* seq = std::get_if<Behaviour::Seq>(&node.node)) {
        check_spans_nested(*seq->first, node.span);
        check_spans_nested(*seq->second, node.span);
    } else if (const auto* assign = std::get_if<Behaviour::Assign>(&node.node)) {
        CHECK(node.span.contains(assign->target.span));
        check_expr_spans(*assign->value, node.span);
    } else if (const auto* iff = std::get_if<Behaviour::If>(&node.node)) {
        check_expr_spans(*iff->cond, node.span);
        check_spans_nested(*iff->then_branch, node.span);
        if (iff->else_branch) check_spans_nested(*iff->else_branch, node.span);
    } else if (const auto* wh = std::get_if<Behaviour::While>(&node.node)) {
        check_expr_spans(*wh->cond, node.span);
        check_spans_nested(*wh->body, node.span);
    } else if (const auto* pr = std::get_if<Behaviour::Println>(&node.node)) {
        check_expr_spans(*pr->arg, node.span);
    }
}

} // namespace

TEST_CASE("program shape: sequence of assignments") {
    SourceProgram p = parse_text("main { myInt = 15; myInt = \"fifteen\" }", "t.ol");
    const auto& seq = as_seq(*p.main);
    CHECK(as_assign(*seq.first).target.segments[0].name == "myInt");
    const auto& lit = std::get<Literal>(as_assign(*seq.second).value->node);
    CHECK(lit.kind == LiteralKind::String);
    CHECK(lit.lexeme == "\"fifteen\"");
}

TEST_CASE("nullProcess parses to Nil") {
    SourceProgram p = parse_text("main { nullProcess }", "t.ol");
    CHECK(std::holds_alternative<Behaviour::Nil>(p.main->node));
}

TEST_CASE("dynamic key path") {
    SourceProgram p = parse_text("main { animals.(key) = 13 }", "t.ol");
    const auto& assign = as_assign(*p.main);
    REQUIRE(assign.target.segments.size() == 2);
    CHECK(assign.target.segments[0].name == "animals");
    CHECK_FALSE(assign.target.segments[0].is_dynamic());
    REQUIRE(assign.target.segments[1].is_dynamic());
    const auto& key = std::get<Expr::PathRead>(assign.target.segments[1].key->node);
    CHECK(key.path.segments[0].name == "key");
}

TEST_CASE("sequence is right-associated") {
    SourceProgram p = parse_main("a = 1; b = 2; c = 3");
    const auto& outer = as_seq(*p.main);
    CHECK(std::holds_alternative<Behaviour::Assign>(outer.first->node));
    const auto& inner = as_seq(*outer.second);
    CHECK(as_assign(*inner.first).target.segments[0].name == "b");
    CHECK(as_assign(*inner.second).target.segments[0].name == "c");
}

TEST_CASE("operator precedence") {
    SourceProgram p = parse_main("x = 1 + 2 * 3 < 4 && ! y == true");
    // && binds loosest here: (1 + (2*3) < 4) && ((!y) == true)
    const auto& top = std::get<Expr::Binary>(as_assign(*p.main).value->node);
    CHECK(top.op == BinaryOp::And);
    const auto& cmp = std::get<Expr::Binary>(top.lhs->node);
    CHECK(cmp.op == BinaryOp::Lt);
    const auto& add = std::get<Expr::Binary>(cmp.lhs->node);
    CHECK(add.op == BinaryOp::Add);
    const auto& mul = std::get<Expr::Binary>(add.rhs->node);
    CHECK(mul.op == BinaryOp::Mul);
    const auto& eq = std::get<Expr::Binary>(top.rhs->node);
    CHECK(eq.op == BinaryOp::Eq);
    CHECK(std::holds_alternative<Expr::Unary>(eq.lhs->node));
}

TEST_CASE("parentheses override precedence") {
    SourceProgram p = parse_main("x = (1 + 2) * 3");
    const auto& mul = std::get<Expr::Binary>(as_assign(*p.main).value->node);
    CHECK(mul.op == BinaryOp::Mul);
    CHECK(std::get<Expr::Binary>(mul.lhs->node).op == BinaryOp::Add);
}

TEST_CASE("if with and without else; while; println") {
    SourceProgram p = parse_main("if ( a > b ) { x = 1 } else { x = 2 }");
    const auto& iff = std::get<Behaviour::If>(p.main->node);
    CHECK(iff.else_branch != nullptr);

    SourceProgram q = parse_main("if ( a > b ) { x = 1 }");
    CHECK(std::get<Behaviour::If>(q.main->node).else_branch == nullptr);

    SourceProgram w = parse_main("while ( i < 10 ) { i = i + 1 }");
    CHECK(std::holds_alternative<Behaviour::While>(w.main->node));

    SourceProgram pr = parse_main("println@Console( a + b )()");
    CHECK(std::holds_alternative<Behaviour::Println>(pr.main->node));
}

TEST_CASE("trailing semicolon before closing brace is rejected") {
    CHECK_THROWS_AS(parse_text("main { a = 1; }", "t.ol"), ParseError);
    CHECK_THROWS_AS(parse_main("if ( a ) { b = 1; }"), ParseError);
}

TEST_CASE("parse errors carry spans and expectations") {
    try {
        parse_text("main { a = }", "t.ol");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.span().start_line == 1);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_text("a = 1", "t.ol"), ParseError);       // missing main
    CHECK_THROWS_AS(parse_text("main { }", "t.ol"), ParseError);    // empty block
    CHECK_THROWS_AS(parse_text("main { a = 1 } extra", "t.ol"), ParseError);
    CHECK_THROWS_AS(parse_main("log@Console( a )()"), ParseError);  // unknown builtin
    CHECK_THROWS_AS(parse_main("println@Files( a )()"), ParseError);
}

TEST_CASE("parse_file: missing path raises IoError") {
    CHECK_THROWS_AS(parse_file("/nonexistent/missing.ol"), IoError);
}

TEST_CASE("parsing is total over the corpus") {
    std::string manifest = testsupport::read_file(testsupport::fixture_path("manifest.tsv"));
    std::istringstream in(manifest);
    std::string line;
    int parsed = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string name = line.substr(0, line.find('\t'));
        SourceProgram p = parse_file(testsupport::fixture_path(name));
        check_spans_nested(*p.main, p.main->span);
        ++parsed;
    }
    CHECK(parsed >= 20);
}

TEST_CASE("pretty-print round trip over the corpus") {
    for (const char* name :
         {"sat_condition.ol", "unsat_condition.ol", "unsat_reassign.ol", "sat_dynamic.ol",
          "sat_nested_if.ol", "sat_dynamic_deep.ol", "sat_arith_ops.ol", "sat_logic.ol"}) {
        SourceProgram original = parse_file(testsupport::fixture_path(name));
        std::string printed = pretty(original);
        SourceProgram reparsed = parse_text(printed, name);
        CHECK_MESSAGE(same_shape(original, reparsed), "round trip changed " << name);
    }
}

TEST_CASE("pretty-print of random programs is a parser fixed point") {
    std::mt19937_64 rng(20260819);
    for (int i = 0; i < 200; ++i) {
        SourceProgram program = testsupport::random_program(rng, 5);
        std::string once = pretty(program);
        SourceProgram reparsed = parse_text(once, "random.ol");
        CHECK(pretty(reparsed) == once);
        check_spans_nested(*reparsed.main, reparsed.main->span);
    }
}
