#include "jstc/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "jstc/union_find.hpp"

namespace jstc {

namespace {

bool span_before(const SourceSpan& a, const SourceSpan& b) {
    if (a.start_line != b.start_line) return a.start_line < b.start_line;
    if (a.start_col != b.start_col) return a.start_col < b.start_col;
    if (a.end_line != b.end_line) return a.end_line < b.end_line;
    return a.end_col < b.end_col;
}

/// Deletion filter over the currently enabled subset; returns the indices
/// of a 1-minimal unsat core drawn from it.
std::vector<std::size_t> core_of_subset(const ConstraintStore& store,
                                        const std::vector<bool>& enabled) {
    std::vector<bool> work = enabled;
    for (std::size_t i = 0; i < store.size(); ++i) {
        if (!work[i]) continue;
        work[i] = false;
        if (satisfiable(store, &work)) work[i] = true;
    }
    std::vector<std::size_t> core;
    for (std::size_t i = 0; i < store.size(); ++i) {
        if (work[i]) core.push_back(i);
    }
    return core;
}

/// How a term is named in a note. Variable paths keep their source name;
/// minted intermediates would leak meaningless internal ids, so they read
/// as "this expression" (and dynamic paths by their static prefix).
std::string describe_term(const TermRef& term) {
    switch (term.kind) {
        case TermKind::Variable:
            return "'" + term.id + "'";
        case TermKind::DynamicPath: {
            auto marker = term.id.find(".DYNAMIC_PATH_");
            if (marker != std::string::npos) {
                return "'" + term.id.substr(0, marker) + ".(...)'";
            }
            return "this path";
        }
        case TermKind::Intermediate:
            break;
    }
    return "this expression";
}

std::string describe_core_item(const Constraint& c) {
    switch (c.kind) {
        case Constraint::Kind::HasType:
            return describe_term(c.term) + " is constrained to " + to_string(c.type) + " here";
        case Constraint::Kind::SameType:
            return describe_term(c.term) + " and " + describe_term(c.other) +
                   " are constrained to the same type here";
        case Constraint::Kind::DeclareTerm:
            break;
    }
    return describe_term(c.term) + " is introduced here";
}

TypeErrorReport error_from_core(const ConstraintStore& store,
                                const std::vector<std::size_t>& core) {
    TypeErrorReport err;

    // The conflicting pair, in assertion order: the first two distinct
    // HasType labels in the core.
    std::vector<BasicType> labels;
    for (std::size_t i : core) {
        const Constraint& c = store.items()[i];
        if (c.kind != Constraint::Kind::HasType) continue;
        if (std::find(labels.begin(), labels.end(), c.type) == labels.end()) {
            labels.push_back(c.type);
        }
    }
    if (labels.size() >= 2) {
        err.conflicting_types = {labels[0], labels[1]};
        err.message = std::string("type mismatch: ") + to_string(labels[0]) + " vs " +
                      to_string(labels[1]);
    } else {
        // Degenerate core (should not happen for this fragment); still
        // report something located rather than nothing.
        err.conflicting_types = {BasicType::Int, BasicType::Int};
        err.message = "conflicting type constraints";
    }

    // Primary location: the core constraint whose provenance span appears
    // last in the source; everything else becomes a related note.
    std::size_t primary = core.front();
    for (std::size_t i : core) {
        const SourceSpan& s = store.items()[i].provenance.span;
        const SourceSpan& best = store.items()[primary].provenance.span;
        if (span_before(best, s)) primary = i;
    }
    err.primary_span = store.items()[primary].provenance.span;
    for (std::size_t i : core) {
        if (i == primary) continue;
        const Constraint& c = store.items()[i];
        err.related.emplace_back(c.provenance.span, describe_core_item(c));
    }
    std::sort(err.related.begin(), err.related.end(),
              [](const auto& a, const auto& b) { return span_before(a.first, b.first); });
    return err;
}

} // namespace

CheckReport report(const ConstraintStore& store, const Verdict& verdict,
                   const SourceProgram& program, CheckStats stats) {
    CheckReport out;
    out.verdict = verdict;
    out.file = program.file;
    out.stats = stats;
    if (verdict.kind != Verdict::Kind::Unsat) return out;

    // Union-find over the whole store, used to mask a conflicting class
    // wholesale once it has been reported: masking only the core would let
    // the same class conflict again through redundant intermediate chains.
    std::unordered_map<std::string, std::size_t> index;
    UnionFind classes;
    auto node = [&](const std::string& id) {
        auto [it, inserted] = index.try_emplace(id, classes.count());
        if (inserted) classes.add();
        return it->second;
    };
    for (const Constraint& c : store.items()) {
        std::size_t t = node(c.term.id);
        if (c.kind == Constraint::Kind::SameType) classes.unite(t, node(c.other.id));
    }
    auto mask_class_of = [&](const std::string& id, std::vector<bool>& enabled) {
        std::size_t root = classes.find(index.at(id));
        for (std::size_t i = 0; i < store.size(); ++i) {
            const Constraint& c = store.items()[i];
            if (!c.is_assertion()) continue;
            bool touches = classes.find(index.at(c.term.id)) == root;
            if (c.kind == Constraint::Kind::SameType) {
                touches = touches || classes.find(index.at(c.other.id)) == root;
            }
            if (touches) enabled[i] = false;
        }
    };

    std::vector<bool> enabled(store.size(), true);
    std::vector<std::size_t> core = verdict.core;
    if (core.empty()) core = core_of_subset(store, enabled);

    // One error per conflicting class: report a core, silence its class,
    // re-solve for conflicts elsewhere.
    while (!core.empty()) {
        out.errors.push_back(error_from_core(store, core));
        mask_class_of(store.items()[core.front()].term.id, enabled);
        if (satisfiable(store, &enabled)) break;
        core = core_of_subset(store, enabled);
    }

    std::sort(out.errors.begin(), out.errors.end(),
              [](const TypeErrorReport& a, const TypeErrorReport& b) {
                  return span_before(a.primary_span, b.primary_span);
              });
    return out;
}

std::string format_text(const CheckReport& report) {
    if (report.errors.empty()) {
        if (report.verdict.kind == Verdict::Kind::Unknown) {
            return "unknown: " + report.verdict.reason + "\n";
        }
        return "ok\n";
    }
    std::ostringstream out;
    for (const TypeErrorReport& err : report.errors) {
        const SourceSpan& s = err.primary_span;
        out << s.file << ':' << s.start_line << ':' << s.start_col
            << ": error: " << err.message << '\n';
        for (const auto& [span, note] : err.related) {
            out << "  " << span.file << ':' << span.start_line << ':' << span.start_col
                << ": note: " << note << '\n';
        }
    }
    return out.str();
}

std::string format_json(const CheckReport& report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["file"] = report.file;
    doc["verdict"] = to_string(report.verdict.kind);
    doc["errors"] = json::array();
    for (const TypeErrorReport& err : report.errors) {
        json e;
        e["message"] = err.message;
        e["span"] = {{"line", err.primary_span.start_line},
                     {"col", err.primary_span.start_col},
                     {"end_line", err.primary_span.end_line},
                     {"end_col", err.primary_span.end_col}};
        e["related"] = json::array();
        for (const auto& [span, note] : err.related) {
            e["related"].push_back({{"line", span.start_line},
                                    {"col", span.start_col},
                                    {"end_line", span.end_line},
                                    {"end_col", span.end_col},
                                    {"note", note}});
        }
        e["types"] = {to_string(err.conflicting_types.first),
                      to_string(err.conflicting_types.second)};
        doc["errors"].push_back(std::move(e));
    }
    doc["stats"] = {{"constraint_count", report.stats.constraint_count},
                    {"term_count", report.stats.term_count},
                    {"solve_millis", report.stats.solve_millis}};
    return doc.dump(2) + "\n";
}

} // namespace jstc
