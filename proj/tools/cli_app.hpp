#pragma once

#include <iosfwd>

namespace betaring::cli {

/// Runs the command line; returns the process exit code (0 ok, 1 failed
/// computation or check, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betaring::cli
