#pragma once

// Shared test machinery: golden-listing normalization, a brute-force
// satisfiability oracle independent of the solvers under test, random
// store/program generators, and small file/subprocess helpers.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jstc/ast.hpp"
#include "jstc/constraint.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string write_temp_file(const std::string& stem, const std::string& content) {
    static int counter = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path path =
        dir / (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, capturing standard output (callers append 2>&1 or
/// 2>/dev/null themselves when stderr matters).
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// --- Listing normalization ---------------------------------------------
//
// The reference listings carry two artifacts of the original generator
// that no reimplementation can reproduce: the absolute values of the
// minted id counters, and declarations of ids that are never used again.
// Canonical form removes those declaration-only ids and renumbers the
// remaining ids in first-occurrence order; everything else (line order,
// grouping blank lines, symbol text) must match exactly.

inline std::string normalize_listing(const std::string& text) {
    static const std::regex id_re(R"(\$\$__term_id_(\d+))");
    static const std::regex bare_declare_re(R"(^\(declare-const \$\$__term_id_(\d+) Term\)$)");

    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    std::unordered_map<std::string, int> occurrences;
    for (const std::string& line : lines) {
        for (std::sregex_iterator it(line.begin(), line.end(), id_re), end; it != end; ++it) {
            ++occurrences[(*it)[1].str()];
        }
    }

    std::vector<std::string> kept;
    for (const std::string& line : lines) {
        std::smatch m;
        if (std::regex_match(line, m, bare_declare_re) && occurrences[m[1].str()] == 1) {
            continue; // declaration-only id: generator-internal artifact
        }
        kept.push_back(line);
    }

    std::unordered_map<std::string, std::string> renumber;
    std::string out;
    for (const std::string& line : kept) {
        std::string rewritten;
        std::size_t last = 0;
        for (std::sregex_iterator it(line.begin(), line.end(), id_re), end; it != end; ++it) {
            const std::smatch& m = *it;
            auto [entry, inserted] =
                renumber.try_emplace(m[1].str(), std::to_string(renumber.size()));
            rewritten += line.substr(last, static_cast<std::size_t>(m.position()) - last);
            rewritten += "$$__term_id_" + entry->second;
            last = static_cast<std::size_t>(m.position() + m.length());
        }
        rewritten += line.substr(last);
        out += rewritten;
        out += '\n';
    }
    while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') {
        out.pop_back();
    }
    return out;
}

// --- Brute-force oracle --------------------------------------------------
//
// Exhaustive enumeration over all 4^n type assignments; completely
// independent of both solver implementations.

inline bool brute_force_satisfiable(const jstc::ConstraintStore& store) {
    std::vector<std::string> ids;
    std::unordered_map<std::string, std::size_t> index;
    auto touch = [&](const std::string& id) {
        if (index.try_emplace(id, ids.size()).second) ids.push_back(id);
    };
    for (const jstc::Constraint& c : store.items()) {
        touch(c.term.id);
        if (c.kind == jstc::Constraint::Kind::SameType) touch(c.other.id);
    }

    const std::size_t n = ids.size();
    if (n > 12) throw std::runtime_error("brute force limited to small stores");
    std::vector<int> assignment(n, 0);
    const std::uint64_t total = 1ull << (2 * n); // 4^n
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t bits = code;
        for (std::size_t i = 0; i < n; ++i) {
            assignment[i] = static_cast<int>(bits & 3u);
            bits >>= 2;
        }
        bool ok = true;
        for (const jstc::Constraint& c : store.items()) {
            if (c.kind == jstc::Constraint::Kind::HasType) {
                if (assignment[index[c.term.id]] != static_cast<int>(c.type)) {
                    ok = false;
                    break;
                }
            } else if (c.kind == jstc::Constraint::Kind::SameType) {
                if (assignment[index[c.term.id]] != assignment[index[c.other.id]]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

// --- Random constraint stores ---------------------------------------------

inline jstc::SourceSpan dummy_span(int line = 1) {
    return jstc::SourceSpan{"random.ol", line, 1, line, 2};
}

inline jstc::ConstraintStore random_store(std::mt19937_64& rng, std::size_t max_terms = 8) {
    jstc::ConstraintStore store;
    std::uniform_int_distribution<std::size_t> term_count(1, max_terms);
    const std::size_t n = term_count(rng);

    std::vector<jstc::TermRef> terms;
    for (std::size_t i = 0; i < n; ++i) {
        jstc::TermRef t{"t" + std::to_string(i), dummy_span(static_cast<int>(i + 1)),
                        jstc::TermKind::Variable};
        store.declare(t, {"decl", t.origin_span});
        terms.push_back(t);
    }

    std::uniform_int_distribution<int> assert_count(0, 12);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> pick_type(0, jstc::kBasicTypeCount - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const int m = assert_count(rng);
    for (int i = 0; i < m; ++i) {
        if (coin(rng) == 0) {
            store.assert_has_type(terms[pick(rng)],
                                  static_cast<jstc::BasicType>(pick_type(rng)),
                                  {"rand", dummy_span(100 + i)});
        } else {
            store.assert_same_type(terms[pick(rng)], terms[pick(rng)],
                                   {"rand", dummy_span(100 + i)});
        }
    }
    return store;
}

// --- Random programs -------------------------------------------------------

inline jstc::ExprPtr random_expr(std::mt19937_64& rng, int depth);

inline jstc::VarPath random_path(std::mt19937_64& rng, int depth) {
    static const std::array<const char*, 6> names = {"a", "b", "c", "d", "p", "q"};
    std::uniform_int_distribution<std::size_t> pick_name(0, names.size() - 1);
    std::uniform_int_distribution<int> shape(0, 9);

    jstc::VarPath path;
    path.span = dummy_span();
    jstc::PathSegment head;
    head.name = names[pick_name(rng)];
    head.span = path.span;
    path.segments.push_back(std::move(head));

    int roll = shape(rng);
    if (roll >= 7) { // dotted second segment
        jstc::PathSegment seg;
        seg.name = names[pick_name(rng)];
        seg.span = path.span;
        path.segments.push_back(std::move(seg));
    } else if (roll == 6 && depth > 0) { // dynamic key
        jstc::PathSegment seg;
        seg.key = random_expr(rng, depth - 1);
        seg.span = path.span;
        path.segments.push_back(std::move(seg));
    }
    return path;
}

inline jstc::ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> shape(0, depth <= 0 ? 4 : 9);
    auto expr = std::make_unique<jstc::Expr>();
    expr->span = dummy_span();
    switch (shape(rng)) {
        case 0:
            expr->node = jstc::Literal{jstc::LiteralKind::Int, "7", expr->span};
            break;
        case 1:
            expr->node = jstc::Literal{jstc::LiteralKind::Double, "2.5", expr->span};
            break;
        case 2:
            expr->node = jstc::Literal{jstc::LiteralKind::String, "\"s\"", expr->span};
            break;
        case 3:
            expr->node = jstc::Literal{jstc::LiteralKind::Bool, "true", expr->span};
            break;
        case 4:
            expr->node = jstc::Expr::PathRead{random_path(rng, depth)};
            break;
        case 5: {
            std::uniform_int_distribution<int> pick_unary(0, 1);
            expr->node = jstc::Expr::Unary{pick_unary(rng) == 0 ? jstc::UnaryOp::Not
                                                                : jstc::UnaryOp::Neg,
                                           random_expr(rng, depth - 1)};
            break;
        }
        default: {
            std::uniform_int_distribution<int> pick_op(0, 11);
            expr->node = jstc::Expr::Binary{static_cast<jstc::BinaryOp>(pick_op(rng)),
                                            random_expr(rng, depth - 1),
                                            random_expr(rng, depth - 1)};
            break;
        }
    }
    return expr;
}

inline jstc::BehaviourPtr random_behaviour(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> shape(0, depth <= 0 ? 2 : 9);
    auto node = std::make_unique<jstc::Behaviour>();
    node->span = dummy_span();
    switch (shape(rng)) {
        case 0:
            node->node = jstc::Behaviour::Nil{};
            break;
        case 1:
            node->node =
                jstc::Behaviour::Assign{random_path(rng, depth), random_expr(rng, depth)};
            break;
        case 2:
            node->node = jstc::Behaviour::Println{random_expr(rng, depth)};
            break;
        case 3:
        case 4:
            node->node = jstc::Behaviour::Seq{random_behaviour(rng, depth - 1),
                                              random_behaviour(rng, depth - 1)};
            break;
        case 5:
        case 6: {
            std::uniform_int_distribution<int> with_else(0, 1);
            node->node = jstc::Behaviour::If{
                random_expr(rng, depth - 1), random_behaviour(rng, depth - 1),
                with_else(rng) == 0 ? nullptr : random_behaviour(rng, depth - 1)};
            break;
        }
        default:
            node->node = jstc::Behaviour::While{random_expr(rng, depth - 1),
                                                random_behaviour(rng, depth - 1)};
            break;
    }
    return node;
}

inline jstc::SourceProgram random_program(std::mt19937_64& rng, int depth = 6) {
    jstc::SourceProgram p;
    p.main = random_behaviour(rng, depth);
    p.file = "random.ol";
    return p;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(JSTC_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(JSTC_GOLDEN_DIR) + "/" + name;
}

struct CorpusEntry {
    std::string name;
    std::string path;
    bool expect_sat;
};

/// Reads fixtures/manifest.tsv: `<file>\t<sat|unsat>` rows, `#` comments.
inline std::vector<CorpusEntry> corpus_entries() {
    std::vector<CorpusEntry> entries;
    std::ifstream in(fixture_path("manifest.tsv"));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        std::string name = line.substr(0, tab);
        std::string verdict = line.substr(tab + 1);
        entries.push_back({name, fixture_path(name), verdict == "sat"});
    }
    return entries;
}

} // namespace testsupport
