#pragma once

namespace ramo {

// entry point for the command-line tool; returns the process exit code
// (0 success, 1 parse/input error, 2 budget exceeded, 3 verification failure)
int run_cli(int argc, char** argv);

} // namespace ramo
