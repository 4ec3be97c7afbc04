#pragma once

namespace moser {

// Full command-line surface; returns the process exit code.
//   0 success, 1 verify-suite failure, 2 invalid parameters or parse error,
//   3 s > n for `sums`, 4 unsolvable (n,s) for `recover`, 5 recovery
//   verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace moser
