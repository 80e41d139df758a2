#include <cstdlib>
#include <iostream>

#include "verify_suite.hpp"

// Runs every acceptance criterion at full scale and prints one line each.
int main(int argc, char** argv) {
    clutterlab::verify::SuiteOptions opts;
    opts.scale = clutterlab::verify::Scale::Full;
    if (argc > 1) opts.only = argv[1];
    if (const char* seed = std::getenv("CLUTTERLAB_SEED")) opts.seed = std::strtoull(seed, nullptr, 10);
    auto results = clutterlab::verify::run_suite(opts);
    return clutterlab::verify::print_results(results, std::cout);
}
