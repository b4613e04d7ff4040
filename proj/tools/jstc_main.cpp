#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jstc/diagnostics.hpp"
#include "jstc/driver.hpp"
#include "jstc/error.hpp"

namespace {

struct CheckOptions {
    std::vector<std::string> inputs;
    std::string backend = "builtin";
    std::string solver_cmd;
    std::string format = "text";
    std::string emit_smt;
    bool solve_after_emit = false;
    double timeout_seconds = 10.0;
};

struct CorpusOptions {
    std::string manifest;
    std::string backend = "builtin";
    std::string solver_cmd;
    double timeout_seconds = 10.0;
};

jstc::Backend parse_backend(const std::string& name) {
    if (name == "external") return jstc::Backend::External;
    if (name == "both") return jstc::Backend::Both;
    return jstc::Backend::Builtin;
}

jstc::SolverConfig make_config(const std::string& backend, const std::string& solver_cmd,
                               double timeout_seconds) {
    jstc::SolverConfig config;
    config.backend = parse_backend(backend);
    config.external_cmd = solver_cmd;
    config.timeout =
        std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000.0));
    return config;
}

void write_emitted(const jstc::SmtScript& script, const std::string& target) {
    if (target == "-") {
        std::cout << script.full();
        return;
    }
    jstc::write_script(script, target);
}

int run_check(const CheckOptions& opt) {
    if ((opt.backend == "external" || opt.backend == "both") && opt.solver_cmd.empty()) {
        std::cerr << "jstc: --backend " << opt.backend
                  << " needs --solver-cmd or JSTC_SOLVER_CMD\n";
        return 2;
    }
    if (!opt.emit_smt.empty() && opt.emit_smt != "-" && opt.inputs.size() > 1) {
        std::cerr << "jstc: --emit-smt with a file path takes exactly one input\n";
        return 2;
    }
    jstc::SolverConfig config = make_config(opt.backend, opt.solver_cmd, opt.timeout_seconds);
    const bool solve = opt.emit_smt.empty() || opt.solve_after_emit;

    // Each input is processed on its own; one bad file must not silence
    // the reports for the rest.
    bool any_unsat = false;
    bool any_error = false;
    for (const std::string& input : opt.inputs) {
        try {
            if (!solve) {
                write_emitted(jstc::script_for_file(input), opt.emit_smt);
                continue;
            }
            jstc::CheckOutcome outcome = jstc::check_file(input, config);
            if (!opt.emit_smt.empty()) write_emitted(outcome.script, opt.emit_smt);
            std::cout << (opt.format == "json" ? jstc::format_json(outcome.report)
                                               : jstc::format_text(outcome.report));
            if (outcome.report.verdict.is_unsat()) any_unsat = true;
            if (outcome.report.verdict.kind == jstc::Verdict::Kind::Unknown) {
                std::cerr << "jstc: " << input
                          << ": solver returned unknown: " << outcome.report.verdict.reason
                          << '\n';
                any_error = true;
            }
        } catch (const jstc::Error& e) {
            std::cerr << "jstc: error: " << e.what() << '\n';
            any_error = true;
        } catch (const jstc::SolveError& e) {
            std::cerr << "jstc: solver error: " << e.what() << '\n';
            any_error = true;
        }
    }
    if (any_error) return 2;
    return any_unsat ? 1 : 0;
}

int run_corpus(const CorpusOptions& opt) {
    if ((opt.backend == "external" || opt.backend == "both") && opt.solver_cmd.empty()) {
        std::cerr << "jstc: --backend " << opt.backend
                  << " needs --solver-cmd or JSTC_SOLVER_CMD\n";
        return 2;
    }
    std::ifstream in(opt.manifest);
    if (!in) {
        std::cerr << "jstc: cannot open manifest '" << opt.manifest << "'\n";
        return 2;
    }
    jstc::SolverConfig config = make_config(opt.backend, opt.solver_cmd, opt.timeout_seconds);
    std::filesystem::path base = std::filesystem::path(opt.manifest).parent_path();

    std::size_t total = 0;
    std::size_t matched = 0;
    bool infrastructure_failed = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::size_t tab = line.find('\t');
        std::string expected = tab == std::string::npos ? "" : line.substr(tab + 1);
        if (expected != "sat" && expected != "unsat") {
            std::cerr << "jstc: " << opt.manifest << ':' << lineno
                      << ": expected '<path>\\t<sat|unsat>'\n";
            return 2;
        }
        std::string entry = line.substr(0, tab);
        std::filesystem::path path = std::filesystem::path(entry);
        if (path.is_relative()) path = base / path;

        ++total;
        try {
            jstc::CheckOutcome outcome = jstc::check_file(path.string(), config);
            std::string got = to_string(outcome.report.verdict.kind);
            if (got == expected) {
                ++matched;
                std::cout << "ok\t" << entry << '\t' << got << '\n';
            } else {
                std::cout << "FAIL\t" << entry << "\texpected " << expected << ", got "
                          << got << '\n';
            }
        } catch (const std::exception& e) {
            std::cout << "ERROR\t" << entry << '\t' << e.what() << '\n';
            infrastructure_failed = true;
        }
    }
    std::cout << matched << '/' << total << " entries match\n";
    if (infrastructure_failed) return 2;
    return matched == total ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SMT-based static type checker for behavioural programs"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "Type-check one or more programs");
    check->add_option("inputs", check_opt.inputs, "Program files")->required();
    check->add_option("--backend", check_opt.backend, "Decision backend")
        ->check(CLI::IsMember({"builtin", "external", "both"}))
        ->capture_default_str();
    check->add_option("--solver-cmd", check_opt.solver_cmd,
                      "External solver command; the script path is appended")
        ->envname("JSTC_SOLVER_CMD");
    check->add_option("--format", check_opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    check->add_option("--emit-smt", check_opt.emit_smt,
                      "Write the generated SMT-LIB script to a file, or - for stdout");
    check->add_flag("--solve", check_opt.solve_after_emit,
                    "Solve as well when --emit-smt is given");
    check->add_option("--timeout", check_opt.timeout_seconds,
                      "External solver timeout in seconds")
        ->capture_default_str();

    CorpusOptions corpus_opt;
    CLI::App* corpus =
        app.add_subcommand("corpus", "Check every entry of an expected-verdict manifest");
    corpus->add_option("manifest", corpus_opt.manifest,
                       "Manifest of <path>\\t<sat|unsat> lines; # starts a comment")
        ->required();
    corpus->add_option("--backend", corpus_opt.backend, "Decision backend")
        ->check(CLI::IsMember({"builtin", "external", "both"}))
        ->capture_default_str();
    corpus->add_option("--solver-cmd", corpus_opt.solver_cmd,
                       "External solver command; the script path is appended")
        ->envname("JSTC_SOLVER_CMD");
    corpus->add_option("--timeout", corpus_opt.timeout_seconds,
                       "External solver timeout in seconds")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return run_check(check_opt);
    return run_corpus(corpus_opt);
}
