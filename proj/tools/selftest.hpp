#pragma once

#include <ostream>

namespace hivebr::cli {

// Runs the golden vectors of every pipeline stage plus a rank-2 verification
// sweep. Returns 0 when everything matches, 3 otherwise; the first failing
// stage is reported with expected and actual values.
int run_selftest(std::ostream& os, unsigned seed);

} // namespace hivebr::cli
