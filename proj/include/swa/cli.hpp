#pragma once

#include <iosfwd>

namespace swa::cli {

// Runs the command line tool. Query batches read from `in` when no query
// file is given. Returns the process exit code: 0 on success (per-query
// errors included), 1 when a verification finds a mismatch, 2 for usage,
// input or configuration errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace swa::cli
