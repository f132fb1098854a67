#pragma once

#include <iosfwd>

namespace placement::cli {

// Dispatches one command line. Returns the process exit status:
//   0  success
//   1  a verification reported false (verify/iso/check-strong) or a replayed
//      move was rejected
//   2  usage, parse or size errors
int run_command(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err);

}  // namespace placement::cli
