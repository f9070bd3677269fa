// Built-in property suite exercising every module invariant on the sample
// diagrams; stops at the first violation.
#pragma once

#include <ostream>

namespace cubeknot {

bool selftest(bool quick, std::ostream& log);

}  // namespace cubeknot
