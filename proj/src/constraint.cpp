#include "jstc/constraint.hpp"

#include <stdexcept>

namespace jstc {

const char* to_string(BasicType t) {
    switch (t) {
        case BasicType::Int: return "int";
        case BasicType::Double: return "double";
        case BasicType::String: return "string";
        case BasicType::Bool: return "bool";
    }
    return "?";
}

std::string to_string(const Constraint& c) {
    switch (c.kind) {
        case Constraint::Kind::DeclareTerm: return "declare " + c.term.id;
        case Constraint::Kind::HasType:
            return "hasType(" + c.term.id + ", " + to_string(c.type) + ")";
        case Constraint::Kind::SameType:
            return "sameType(" + c.term.id + ", " + c.other.id + ")";
    }
    return "?";
}

TermRef ConstraintStore::fresh_intermediate(const SourceSpan& span) {
    TermRef t;
    t.id = "$$__term_id_" + std::to_string(next_term_id_++);
    t.origin_span = span;
    t.kind = TermKind::Intermediate;
    return t;
}

TermRef ConstraintStore::fresh_dynamic_path(const std::string& static_prefix,
                                            const SourceSpan& span) {
    TermRef t;
    t.id = static_prefix + ".DYNAMIC_PATH_$$__term_id_" + std::to_string(next_term_id_++);
    t.origin_span = span;
    t.kind = TermKind::DynamicPath;
    return t;
}

void ConstraintStore::declare(const TermRef& term, Provenance provenance) {
    if (!declared_.insert(term.id).second) {
        throw std::logic_error("duplicate declaration of term '" + term.id + "'");
    }
    items_.push_back(Constraint{Constraint::Kind::DeclareTerm, term, {}, BasicType::Int,
                                std::move(provenance)});
}

void ConstraintStore::assert_has_type(const TermRef& term, BasicType type,
                                      Provenance provenance) {
    if (!is_declared(term.id)) {
        throw std::logic_error("hasType references undeclared term '" + term.id + "'");
    }
    items_.push_back(
        Constraint{Constraint::Kind::HasType, term, {}, type, std::move(provenance)});
}

void ConstraintStore::assert_same_type(const TermRef& a, const TermRef& b,
                                       Provenance provenance) {
    if (!is_declared(a.id)) {
        throw std::logic_error("sameType references undeclared term '" + a.id + "'");
    }
    if (!is_declared(b.id)) {
        throw std::logic_error("sameType references undeclared term '" + b.id + "'");
    }
    items_.push_back(
        Constraint{Constraint::Kind::SameType, a, b, BasicType::Int, std::move(provenance)});
}

TermRef ConstraintStore::pop_term() {
    if (term_stack_.empty()) {
        throw std::logic_error("term stack underflow");
    }
    TermRef t = std::move(term_stack_.back());
    term_stack_.pop_back();
    return t;
}

void ConstraintStore::mark_group_break() {
    // coalesces: marking twice before the same item is one break
    if (group_breaks_.empty() || group_breaks_.back() != items_.size()) {
        group_breaks_.push_back(items_.size());
    }
}

bool same_constraints(const ConstraintStore& a, const ConstraintStore& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Constraint& ca = a.items()[i];
        const Constraint& cb = b.items()[i];
        if (ca.kind != cb.kind || ca.term.id != cb.term.id) return false;
        if (ca.kind == Constraint::Kind::HasType && ca.type != cb.type) return false;
        if (ca.kind == Constraint::Kind::SameType && ca.other.id != cb.other.id) return false;
    }
    return true;
}

} // namespace jstc
