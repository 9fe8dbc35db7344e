// Runs criteria 1-9 with the default seed and sample counts and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "zieschang/selftest.hpp"

int main(int argc, char** argv) {
    zieschang::SelftestOptions options;
    if (argc > 1) options.samples = std::stoi(argv[1]);
    if (argc > 2) options.seed = std::stoull(argv[2]);
    const auto results = zieschang::run_acceptance(options, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("ALL PASS")) << '\n';
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
