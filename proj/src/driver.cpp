#include "jstc/driver.hpp"

#include <chrono>

#include "jstc/checker.hpp"
#include "jstc/parser.hpp"

namespace jstc {

namespace {

std::size_t count_terms(const ConstraintStore& store) {
    std::size_t n = 0;
    for (const Constraint& c : store.items()) {
        if (c.kind == Constraint::Kind::DeclareTerm) ++n;
    }
    return n;
}

} // namespace

CheckOutcome check_file(const std::string& path, const SolverConfig& config) {
    SourceProgram program = parse_file(path);
    ConstraintStore store = check_program(program);

    auto begin = std::chrono::steady_clock::now();
    Verdict verdict = solve(store, config);
    auto end = std::chrono::steady_clock::now();

    CheckStats stats;
    stats.constraint_count = store.size();
    stats.term_count = count_terms(store);
    stats.solve_millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - begin).count();

    CheckOutcome outcome;
    outcome.report = report(store, verdict, program, stats);
    outcome.script = render(store);
    return outcome;
}

SmtScript script_for_file(const std::string& path) {
    SourceProgram program = parse_file(path);
    ConstraintStore store = check_program(program);
    return render(store);
}

} // namespace jstc
