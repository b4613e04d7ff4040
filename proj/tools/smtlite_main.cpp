#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "jstc/smtlite.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: smtlite <script.smt2>\n";
        return 2;
    }
    std::ifstream in(argv[1], std::ios::binary);
    if (!in) {
        std::cerr << "smtlite: cannot open '" << argv[1] << "'\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    std::string why;
    std::string verdict = jstc::smtlite::check_script(buffer.str(), &why);
    std::cout << verdict << '\n';
    if (verdict == "unknown" && !why.empty()) {
        std::cerr << "smtlite: " << why << '\n';
    }
    return 0;
}
