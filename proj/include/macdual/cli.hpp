#pragma once

#include <iosfwd>

namespace macdual {

// Full command-line driver; streams injected for testability.  Exit codes:
// 0 success / checks passed, 2 a mathematical check failed, 1 usage or IO
// error.  When --seed is absent the MACDUAL_SEED environment variable is
// consulted before falling back to 1.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace macdual
