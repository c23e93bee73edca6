#pragma once

namespace cca::cli {

// Full command-line front end. Returns the process exit code:
//   0  success
//   1  computation or I/O error
//   2  usage error (unknown flag, missing or conflicting parameters)
int run(int argc, const char* const* argv);

}  // namespace cca::cli
