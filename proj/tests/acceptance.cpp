// Acceptance gate: runs the full verification suite and prints one
// pass/fail line per check.  Exit status 0 means every check passed.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "cbsep/selftest.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::vector<cbsep::CheckOutcome> results = cbsep::run_selftest("full");
    const double elapsed =
        std::chrono::duration<double>(clock::now() - start).count();

    int failures = 0;
    for (const cbsep::CheckOutcome& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.detail << "\n";
        if (!r.pass) ++failures;
    }
    std::printf("%zu checks, %d failed, %.1f s\n", results.size(), failures,
                elapsed);
    return failures == 0 ? 0 : 1;
}
