// Acceptance suite runner: prints one pass/fail line per criterion and exits
// nonzero when any selected criterion fails. An optional argument filters
// criteria by substring (used to register each criterion with ctest).

#include <cstdio>
#include <string>

#include "goldens.hpp"

int main(int argc, char** argv) {
    std::string filter;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--filter" && i + 1 < argc) {
            filter = argv[++i];
        } else if (arg.rfind("--filter=", 0) == 0) {
            filter = arg.substr(9);
        } else {
            std::fprintf(stderr, "usage: %s [--filter SUBSTRING]\n", argv[0]);
            return 2;
        }
    }
    const auto results = wqed::cli::run_goldens(filter);
    if (results.empty()) {
        std::fprintf(stderr, "no criteria match filter '%s'\n", filter.c_str());
        return 2;
    }
    return wqed::cli::report_goldens(results) == 0 ? 0 : 1;
}
