#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jstc/source_span.hpp"

namespace jstc {

enum class BasicType { Int, Double, String, Bool };

constexpr int kBasicTypeCount = 4;

const char* to_string(BasicType t);

enum class TermKind { Variable, Intermediate, DynamicPath };

/// A named SMT constant: a variable path (`animals.cat`), a minted
/// intermediate (`$$__term_id_7`), or a per-occurrence dynamic-path term
/// (`animals.DYNAMIC_PATH_$$__term_id_7`).
struct TermRef {
    std::string id;
    SourceSpan origin_span;
    TermKind kind = TermKind::Intermediate;
};

/// Which visitor step emitted a constraint, and for which source span.
/// Drives diagnostics; never affects solving.
struct Provenance {
    std::string rule;
    SourceSpan span;
};

struct Constraint {
    enum class Kind { DeclareTerm, HasType, SameType };

    Kind kind;
    TermRef term;                      // declared term / typed term / SameType lhs
    TermRef other;                     // SameType rhs
    BasicType type = BasicType::Int;   // HasType only
    Provenance provenance;

    bool is_assertion() const { return kind != Kind::DeclareTerm; }
};

std::string to_string(const Constraint& c);

/// Ordered list of declarations and assertions plus the bookkeeping the
/// generator needs: the id counter, the declared-id set, and the term
/// stack expressions leave their result on.
///
/// Invariants enforced here: minted ids strictly increase, a term is
/// declared at most once, and assertions may only reference declared
/// terms (violations are generator bugs and throw std::logic_error).
class ConstraintStore {
public:
    const std::vector<Constraint>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }

    std::uint64_t next_term_id() const { return next_term_id_; }
    std::size_t declared_count() const { return declared_.size(); }
    bool is_declared(const std::string& id) const { return declared_.count(id) != 0; }

    TermRef fresh_intermediate(const SourceSpan& span);
    TermRef fresh_dynamic_path(const std::string& static_prefix, const SourceSpan& span);

    void declare(const TermRef& term, Provenance provenance);
    void assert_has_type(const TermRef& term, BasicType type, Provenance provenance);
    void assert_same_type(const TermRef& a, const TermRef& b, Provenance provenance);

    void push_term(TermRef term) { term_stack_.push_back(std::move(term)); }
    TermRef pop_term();
    const std::vector<TermRef>& term_stack() const { return term_stack_; }

    /// Records that a blank line belongs before the next appended item.
    /// Scripts group constraints per statement the way the renderer prints
    /// them; the break carries no logical content.
    void mark_group_break();
    const std::vector<std::size_t>& group_breaks() const { return group_breaks_; }

private:
    std::vector<Constraint> items_;
    std::vector<std::size_t> group_breaks_;
    std::vector<TermRef> term_stack_;
    std::unordered_set<std::string> declared_;
    std::uint64_t next_term_id_ = 0;
};

/// Byte-for-byte comparison of two stores' constraint sequences (ids,
/// types, order). Provenance and spans are ignored.
bool same_constraints(const ConstraintStore& a, const ConstraintStore& b);

} // namespace jstc
