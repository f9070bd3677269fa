// Command-line driver.  Exit codes: 0 success, 1 invalid input, 2 illegal
// move, 3 budget exhausted, 4 internal invariant violation.
#pragma once

namespace cubeknot::cli {

int run(int argc, const char* const* argv);

}  // namespace cubeknot::cli
