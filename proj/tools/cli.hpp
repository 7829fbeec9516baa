#pragma once

#include <iosfwd>

namespace codebound::cli {

/// Runs the command line `argv[0..argc)` writing to `out`/`err`. Returns 0 on
/// success, 1 on a table mismatch or oracle contradiction, 2 on usage or
/// resource errors.
int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace codebound::cli
