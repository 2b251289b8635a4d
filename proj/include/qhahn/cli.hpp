#pragma once

namespace qhahn::cli {

// Full command-line entry point; returns the process exit code.
// 0 = success / all checks verified, 1 = a mathematical check failed,
// 2 = invalid input or violated precondition.
int run(int argc, const char* const* argv);

}  // namespace qhahn::cli
