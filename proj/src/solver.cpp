#include "jstc/solver.hpp"

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "jstc/error.hpp"
#include "jstc/union_find.hpp"

namespace jstc {

const char* to_string(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Sat: return "sat";
        case Verdict::Kind::Unsat: return "unsat";
        case Verdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

bool satisfiable(const ConstraintStore& store, const std::vector<bool>* enabled) {
    // Union-find over term ids; SameType unions classes, HasType labels
    // them. A class with two distinct labels is the one and only way the
    // emitted fragment can be inconsistent.
    std::unordered_map<std::string, std::size_t> index;
    UnionFind uf;
    std::vector<std::optional<BasicType>> label;

    auto node = [&](const std::string& id) {
        auto [it, inserted] = index.try_emplace(id, uf.count());
        if (inserted) {
            uf.add();
            label.emplace_back();
        }
        return it->second;
    };

    const auto& items = store.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (enabled && !(*enabled)[i]) continue;
        const Constraint& c = items[i];
        switch (c.kind) {
            case Constraint::Kind::DeclareTerm:
                node(c.term.id);
                break;
            case Constraint::Kind::HasType: {
                std::size_t root = uf.find(node(c.term.id));
                if (label[root] && *label[root] != c.type) return false;
                label[root] = c.type;
                break;
            }
            case Constraint::Kind::SameType: {
                std::size_t a = uf.find(node(c.term.id));
                std::size_t b = uf.find(node(c.other.id));
                if (a == b) break;
                if (label[a] && label[b] && *label[a] != *label[b]) return false;
                std::size_t root = uf.unite(a, b);
                label[root] = label[a] ? label[a] : label[b];
                break;
            }
        }
    }
    return true;
}

std::vector<std::size_t> shrink_core(const ConstraintStore& store) {
    if (satisfiable(store)) {
        throw SolveError(SolveError::Kind::Precondition,
                         "shrink_core requires an unsatisfiable store");
    }
    // Deletion filter: drop each item, keep it only if dropping it makes
    // the rest satisfiable. Declarations never flip the verdict, so the
    // resulting core holds assertions only.
    std::vector<bool> enabled(store.size(), true);
    for (std::size_t i = 0; i < store.size(); ++i) {
        enabled[i] = false;
        if (satisfiable(store, &enabled)) {
            enabled[i] = true;
        }
    }
    std::vector<std::size_t> core;
    for (std::size_t i = 0; i < store.size(); ++i) {
        if (enabled[i]) core.push_back(i);
    }
    return core;
}

Verdict solve_builtin(const ConstraintStore& store) {
    if (satisfiable(store)) return Verdict::sat();
    return Verdict::unsat(shrink_core(store));
}

namespace {

std::vector<std::string> split_command(const std::string& command) {
    std::vector<std::string> parts;
    std::istringstream in(command);
    std::string part;
    while (in >> part) parts.push_back(part);
    return parts;
}

struct TempFile {
    std::string path;
    explicit TempFile(const SmtScript& script) {
        char buf[] = "/tmp/jstc-XXXXXX.smt2";
        int fd = ::mkstemps(buf, 5);
        if (fd < 0) {
            throw SolveError(SolveError::Kind::Spawn,
                             std::string("cannot create temporary script: ") +
                                 std::strerror(errno));
        }
        path = buf;
        std::string text = script.full();
        const char* data = text.data();
        std::size_t left = text.size();
        while (left > 0) {
            ssize_t n = ::write(fd, data, left);
            if (n < 0) {
                ::close(fd);
                ::unlink(buf);
                throw SolveError(SolveError::Kind::Spawn,
                                 std::string("cannot write temporary script: ") +
                                     std::strerror(errno));
            }
            data += n;
            left -= static_cast<std::size_t>(n);
        }
        ::close(fd);
    }
    ~TempFile() { ::unlink(path.c_str()); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
};

/// Runs argv, reading stdout until EOF or deadline. Spawn failures are
/// reported through a CLOEXEC pipe so a missing binary is distinguishable
/// from solver output.
std::string run_with_timeout(const std::vector<std::string>& argv,
                             std::chrono::milliseconds timeout) {
    int out_pipe[2];
    int err_pipe[2];
    if (::pipe(out_pipe) != 0 || ::pipe2(err_pipe, O_CLOEXEC) != 0) {
        throw SolveError(SolveError::Kind::Spawn,
                         std::string("pipe failed: ") + std::strerror(errno));
    }

    pid_t pid = ::fork();
    if (pid < 0) {
        throw SolveError(SolveError::Kind::Spawn,
                         std::string("fork failed: ") + std::strerror(errno));
    }

    if (pid == 0) {
        ::close(out_pipe[0]);
        ::close(err_pipe[0]);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        int devnull = ::open("/dev/null", O_WRONLY);
        if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
        std::vector<char*> raw;
        raw.reserve(argv.size() + 1);
        for (const std::string& a : argv) raw.push_back(const_cast<char*>(a.c_str()));
        raw.push_back(nullptr);
        ::execvp(raw[0], raw.data());
        int err = errno;
        ssize_t ignored = ::write(err_pipe[1], &err, sizeof(err));
        (void)ignored;
        ::_exit(127);
    }

    ::close(out_pipe[1]);
    ::close(err_pipe[1]);

    // A successful exec closes err_pipe via CLOEXEC; otherwise it carries
    // the child's errno.
    int exec_errno = 0;
    ssize_t err_n = ::read(err_pipe[0], &exec_errno, sizeof(exec_errno));
    ::close(err_pipe[0]);
    if (err_n == static_cast<ssize_t>(sizeof(exec_errno))) {
        ::close(out_pipe[0]);
        ::waitpid(pid, nullptr, 0);
        throw SolveError(SolveError::Kind::Spawn, "cannot run '" + argv[0] +
                                                      "': " + std::strerror(exec_errno));
    }

    auto deadline = std::chrono::steady_clock::now() + timeout;
    std::string output;
    char buf[4096];
    bool timed_out = false;
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            timed_out = true;
            break;
        }
        struct pollfd pfd = {out_pipe[0], POLLIN, 0};
        int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
        if (ready < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (ready == 0) {
            timed_out = true;
            break;
        }
        ssize_t n = ::read(out_pipe[0], buf, sizeof(buf));
        if (n <= 0) break;
        output.append(buf, static_cast<std::size_t>(n));
    }
    ::close(out_pipe[0]);

    if (timed_out) {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, nullptr, 0);
        throw SolveError(SolveError::Kind::Timeout,
                         "'" + argv[0] + "' exceeded " +
                             std::to_string(timeout.count()) + " ms");
    }
    ::waitpid(pid, nullptr, 0);
    return output;
}

std::string first_token(const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) return {};
    std::size_t end = text.find_first_of(" \t\r\n", start);
    return text.substr(start, (end == std::string::npos ? text.size() : end) - start);
}

} // namespace

Verdict solve_external(const SmtScript& script, const SolverConfig& config,
                       const ConstraintStore* store_for_core) {
    if (config.external_cmd.empty()) {
        throw SolveError(SolveError::Kind::Spawn, "no external solver command configured");
    }
    std::vector<std::string> argv = split_command(config.external_cmd);
    if (argv.empty()) {
        throw SolveError(SolveError::Kind::Spawn, "external solver command is blank");
    }

    TempFile file(script);
    argv.push_back(file.path);
    std::string output = run_with_timeout(argv, config.timeout);

    std::string token = first_token(output);
    if (token == "sat") return Verdict::sat();
    if (token == "unsat") {
        if (store_for_core) return Verdict::unsat(shrink_core(*store_for_core));
        return Verdict::unsat({});
    }
    if (token == "unknown") return Verdict::unknown("external solver returned unknown");
    throw SolveError(SolveError::Kind::MalformedOutput,
                     token.empty() ? "external solver produced no output"
                                   : "unexpected external solver output: '" + token + "'");
}

Verdict solve(const ConstraintStore& store, const SolverConfig& config) {
    switch (config.backend) {
        case Backend::Builtin:
            return solve_builtin(store);
        case Backend::External:
            return solve_external(render(store), config, &store);
        case Backend::Both: {
            Verdict ours = solve_builtin(store);
            Verdict theirs = solve_external(render(store), config, nullptr);
            if (theirs.kind != Verdict::Kind::Unknown && ours.kind != theirs.kind) {
                throw SolveError(SolveError::Kind::BackendMismatch,
                                 std::string("backend disagreement: builtin says ") +
                                     to_string(ours.kind) + ", external says " +
                                     to_string(theirs.kind));
            }
            return ours;
        }
    }
    throw SolveError(SolveError::Kind::Precondition, "unhandled backend");
}

} // namespace jstc
