#pragma once

#include <string>
#include <vector>

namespace cbsep {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the verification suite.  `level` is "quick" (reduced sizes, seconds)
/// or "full" (the complete desk-scale sweeps).  Each check catches its own
/// exceptions and reports them as failures, so one broken area cannot mask
/// the others.
std::vector<CheckOutcome> run_selftest(const std::string& level);

}  // namespace cbsep
