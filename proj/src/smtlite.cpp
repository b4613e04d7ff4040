#include "jstc/smtlite.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

// A deliberately small SMT-LIB 2 evaluator for the quantifier-free
// ground-equality fragment: define-fun macros, (= ...), (distinct ...),
// (not (= ...)), (and ...), uninterpreted functions via congruence
// closure. Anything outside that answers "unknown". It shares no code
// with the constraint-level solver so the two can cross-check each other.

namespace jstc::smtlite {

namespace {

struct Fail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- S-expressions ---------------------------------------------------

struct Sexp {
    bool is_atom = false;
    std::string atom;
    std::vector<Sexp> items;
};

struct Reader {
    std::string_view text;
    std::size_t pos = 0;

    void skip_trivia() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_trivia();
        return pos >= text.size();
    }

    Sexp read() {
        skip_trivia();
        if (pos >= text.size()) throw Fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Sexp list;
            for (;;) {
                skip_trivia();
                if (pos >= text.size()) throw Fail("unterminated list");
                if (text[pos] == ')') {
                    ++pos;
                    return list;
                }
                list.items.push_back(read());
            }
        }
        if (c == ')') throw Fail("unexpected ')'");
        if (c == '|') {
            std::size_t close = text.find('|', pos + 1);
            if (close == std::string_view::npos) throw Fail("unterminated |symbol|");
            Sexp atom;
            atom.is_atom = true;
            atom.atom = std::string(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            return atom;
        }
        if (c == '"') {
            std::size_t end = pos + 1;
            while (end < text.size() && text[end] != '"') ++end;
            if (end >= text.size()) throw Fail("unterminated string");
            Sexp atom;
            atom.is_atom = true;
            atom.atom = std::string(text.substr(pos, end - pos + 1));
            pos = end + 1;
            return atom;
        }
        std::size_t end = pos;
        while (end < text.size()) {
            char d = text[end];
            if (d == '(' || d == ')' || d == ';' || d == '|' || d == ' ' || d == '\t' ||
                d == '\r' || d == '\n') {
                break;
            }
            ++end;
        }
        Sexp atom;
        atom.is_atom = true;
        atom.atom = std::string(text.substr(pos, end - pos));
        pos = end;
        return atom;
    }
};

// --- Congruence closure ----------------------------------------------

class Egraph {
public:
    int intern_atom(const std::string& name) {
        auto it = atoms_.find(name);
        if (it != atoms_.end()) return it->second;
        int id = new_node(name, {});
        atoms_.emplace(name, id);
        return id;
    }

    int intern_apply(const std::string& head, std::vector<int> args) {
        Sig sig{head, canonical(args)};
        auto it = sigs_.find(sig);
        if (it != sigs_.end()) return root(it->second);
        int id = new_node(head, std::move(args));
        sigs_.emplace(std::move(sig), id);
        for (int r : distinct_arg_roots(id)) uses_[static_cast<std::size_t>(r)].push_back(id);
        return id;
    }

    void merge(int a, int b) {
        std::vector<std::pair<int, int>> pending{{a, b}};
        while (!pending.empty()) {
            auto [x, y] = pending.back();
            pending.pop_back();
            int rx = root(x);
            int ry = root(y);
            if (rx == ry) continue;
            if (uses_[static_cast<std::size_t>(rx)].size() >
                uses_[static_cast<std::size_t>(ry)].size()) {
                std::swap(rx, ry);
            }
            parent_[static_cast<std::size_t>(rx)] = ry;
            std::vector<int> moved;
            moved.swap(uses_[static_cast<std::size_t>(rx)]);
            for (int u : moved) {
                Sig sig{heads_[static_cast<std::size_t>(u)],
                        canonical(args_[static_cast<std::size_t>(u)])};
                auto [it, inserted] = sigs_.try_emplace(sig, u);
                if (!inserted && root(it->second) != root(u)) {
                    pending.emplace_back(u, it->second);
                }
                uses_[static_cast<std::size_t>(ry)].push_back(u);
            }
        }
    }

    bool same(int a, int b) { return root(a) == root(b); }

private:
    struct Sig {
        std::string head;
        std::vector<int> args;
        bool operator<(const Sig& o) const {
            if (head != o.head) return head < o.head;
            return args < o.args;
        }
    };

    int new_node(std::string head, std::vector<int> args) {
        int id = static_cast<int>(heads_.size());
        heads_.push_back(std::move(head));
        args_.push_back(std::move(args));
        parent_.push_back(id);
        uses_.emplace_back();
        return id;
    }

    int root(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    std::vector<int> canonical(const std::vector<int>& args) {
        std::vector<int> out;
        out.reserve(args.size());
        for (int a : args) out.push_back(root(a));
        return out;
    }

    std::vector<int> distinct_arg_roots(int id) {
        std::vector<int> roots;
        for (int a : args_[static_cast<std::size_t>(id)]) {
            int r = root(a);
            bool seen = false;
            for (int s : roots) seen = seen || s == r;
            if (!seen) roots.push_back(r);
        }
        return roots;
    }

    std::vector<std::string> heads_;
    std::vector<std::vector<int>> args_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> uses_;
    std::map<Sig, int> sigs_;
    std::unordered_map<std::string, int> atoms_;
};

// --- Script evaluation ------------------------------------------------

struct Macro {
    std::vector<std::string> params;
    Sexp body;
};

class Evaluator {
public:
    std::string run(std::string_view text, std::string* why) {
        Reader reader{text};
        try {
            while (!reader.at_end()) {
                Sexp cmd = reader.read();
                if (cmd.is_atom || cmd.items.empty() || !cmd.items[0].is_atom) {
                    throw Fail("malformed command");
                }
                const std::string& head = cmd.items[0].atom;
                if (head == "assert") {
                    if (cmd.items.size() != 2) throw Fail("assert takes one term");
                    handle_assert(expand(cmd.items[1], 0));
                } else if (head == "define-fun") {
                    define_macro(cmd);
                } else if (head == "check-sat") {
                    return decide();
                } else if (head == "declare-sort" || head == "declare-const" ||
                           head == "declare-fun" || head == "set-logic" ||
                           head == "set-info" || head == "set-option" || head == "exit") {
                    // Name bookkeeping only; nothing to do in this fragment.
                } else {
                    throw Fail("unsupported command: " + head);
                }
            }
            throw Fail("no (check-sat) in script");
        } catch (const Fail& f) {
            if (why) *why = f.what();
            return "unknown";
        }
    }

private:
    void define_macro(const Sexp& cmd) {
        if (cmd.items.size() != 5 || !cmd.items[1].is_atom || cmd.items[2].is_atom) {
            throw Fail("malformed define-fun");
        }
        Macro macro;
        for (const Sexp& binding : cmd.items[2].items) {
            if (binding.is_atom || binding.items.size() != 2 || !binding.items[0].is_atom) {
                throw Fail("malformed define-fun parameter");
            }
            macro.params.push_back(binding.items[0].atom);
        }
        macro.body = cmd.items[4];
        macros_[cmd.items[1].atom] = std::move(macro);
    }

    Sexp substitute(const Sexp& body, const std::map<std::string, Sexp>& env) {
        if (body.is_atom) {
            auto it = env.find(body.atom);
            return it != env.end() ? it->second : body;
        }
        Sexp out;
        out.items.reserve(body.items.size());
        for (const Sexp& item : body.items) out.items.push_back(substitute(item, env));
        return out;
    }

    Sexp expand(const Sexp& term, int depth) {
        if (depth > 512) throw Fail("term nesting or macro expansion too deep");
        if (term.is_atom) return term;
        if (term.items.empty() || !term.items[0].is_atom) throw Fail("malformed term");
        Sexp out;
        out.items.push_back(term.items[0]);
        for (std::size_t i = 1; i < term.items.size(); ++i) {
            out.items.push_back(expand(term.items[i], depth + 1));
        }
        auto it = macros_.find(term.items[0].atom);
        if (it == macros_.end()) return out;
        if (it->second.params.size() != out.items.size() - 1) {
            throw Fail("wrong arity for " + term.items[0].atom);
        }
        std::map<std::string, Sexp> env;
        for (std::size_t i = 0; i < it->second.params.size(); ++i) {
            env[it->second.params[i]] = out.items[i + 1];
        }
        return expand(substitute(it->second.body, env), depth + 1);
    }

    int intern(const Sexp& term) {
        if (term.is_atom) return graph_.intern_atom(term.atom);
        if (term.items.empty() || !term.items[0].is_atom) throw Fail("malformed term");
        std::vector<int> args;
        for (std::size_t i = 1; i < term.items.size(); ++i) {
            args.push_back(intern(term.items[i]));
        }
        return graph_.intern_apply(term.items[0].atom, std::move(args));
    }

    void handle_assert(const Sexp& term) {
        if (term.is_atom) {
            if (term.atom == "true") return;
            if (term.atom == "false") {
                contradiction_ = true;
                return;
            }
            throw Fail("unsupported assertion: " + term.atom);
        }
        if (term.items.empty() || !term.items[0].is_atom) throw Fail("malformed assertion");
        const std::string& head = term.items[0].atom;
        if (head == "and") {
            for (std::size_t i = 1; i < term.items.size(); ++i) handle_assert(term.items[i]);
            return;
        }
        if (head == "=") {
            if (term.items.size() < 3) throw Fail("= needs two terms");
            int first = intern(term.items[1]);
            for (std::size_t i = 2; i < term.items.size(); ++i) {
                graph_.merge(first, intern(term.items[i]));
            }
            return;
        }
        if (head == "distinct") {
            std::vector<int> ids;
            for (std::size_t i = 1; i < term.items.size(); ++i) {
                ids.push_back(intern(term.items[i]));
            }
            for (std::size_t i = 0; i < ids.size(); ++i) {
                for (std::size_t j = i + 1; j < ids.size(); ++j) {
                    diseqs_.emplace_back(ids[i], ids[j]);
                }
            }
            return;
        }
        if (head == "not" && term.items.size() == 2 && !term.items[1].is_atom &&
            !term.items[1].items.empty() && term.items[1].items[0].is_atom &&
            term.items[1].items[0].atom == "=" && term.items[1].items.size() == 3) {
            diseqs_.emplace_back(intern(term.items[1].items[1]),
                                 intern(term.items[1].items[2]));
            return;
        }
        throw Fail("unsupported assertion form: " + head);
    }

    std::string decide() {
        if (contradiction_) return "unsat";
        for (const auto& [a, b] : diseqs_) {
            if (graph_.same(a, b)) return "unsat";
        }
        return "sat";
    }

    Egraph graph_;
    std::map<std::string, Macro> macros_;
    std::vector<std::pair<int, int>> diseqs_;
    bool contradiction_ = false;
};

} // namespace

std::string check_script(std::string_view text, std::string* why) {
    Evaluator evaluator;
    return evaluator.run(text, why);
}

} // namespace jstc::smtlite
