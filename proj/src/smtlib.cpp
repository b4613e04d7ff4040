#include "jstc/smtlib.hpp"

#include <fstream>

#include "jstc/error.hpp"

namespace jstc {

namespace {

bool is_symbol_char(char c) {
    if (c >= 'a' && c <= 'z') return true;
    if (c >= 'A' && c <= 'Z') return true;
    if (c >= '0' && c <= '9') return true;
    switch (c) {
        case '+': case '-': case '/': case '*': case '=': case '%': case '?': case '!':
        case '.': case '$': case '_': case '~': case '&': case '^': case '<': case '>':
        case '@':
            return true;
        default:
            return false;
    }
}

} // namespace

bool is_simple_symbol(std::string_view s) {
    if (s.empty()) return false;
    if (s[0] >= '0' && s[0] <= '9') return false;
    for (char c : s) {
        if (!is_symbol_char(c)) return false;
    }
    return true;
}

std::string render_symbol(const std::string& id) {
    if (is_simple_symbol(id)) return id;
    std::string out = "|";
    for (char c : id) {
        if (c == '|' || c == '\\') {
            // neither character can appear inside a quoted symbol; map to
            // a printable stand-in rather than emit an illegal script
            out += '_';
        } else {
            out += c;
        }
    }
    out += "|";
    return out;
}

std::string render_preamble() {
    return "(declare-sort Term 0)\n"
           "(declare-sort Type 0)\n"
           "(declare-const int Type)\n"
           "(declare-const double Type)\n"
           "(declare-const string Type)\n"
           "(declare-const bool Type)\n"
           "(assert (distinct int double string bool))\n"
           "(declare-fun typeOf (Term) Type)\n"
           "(define-fun hasType ((t Term) (ty Type)) Bool (= (typeOf t) ty))\n"
           "(define-fun sameType ((a Term) (b Term)) Bool (= (typeOf a) (typeOf b)))\n"
           "\n";
}

SmtScript render(const ConstraintStore& store) {
    SmtScript script;
    script.preamble = render_preamble();
    script.check_command = "(check-sat)\n";

    std::string& body = script.body;
    const auto& breaks = store.group_breaks();
    std::size_t next_break = 0;
    bool wrote_any = false;
    for (std::size_t i = 0; i < store.items().size(); ++i) {
        while (next_break < breaks.size() && breaks[next_break] <= i) {
            // a break at the very start or after nothing yet would print a
            // stray leading blank; skip it
            if (breaks[next_break] == i && wrote_any) body += "\n";
            ++next_break;
        }
        const Constraint& c = store.items()[i];
        switch (c.kind) {
            case Constraint::Kind::DeclareTerm:
                body += "(declare-const " + render_symbol(c.term.id) + " Term)\n";
                break;
            case Constraint::Kind::HasType:
                body += "(assert (hasType " + render_symbol(c.term.id) + " " +
                        to_string(c.type) + "))\n";
                break;
            case Constraint::Kind::SameType:
                body += "(assert (sameType " + render_symbol(c.term.id) + " " +
                        render_symbol(c.other.id) + "))\n";
                break;
        }
        wrote_any = true;
    }
    if (!script.body.empty()) script.body += "\n";
    return script;
}

void write_script(const SmtScript& script, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing", path);
    out << script.full();
    out.flush();
    if (!out) throw IoError("cannot write file", path);
}

} // namespace jstc
