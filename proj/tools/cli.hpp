#pragma once

#include <iosfwd>

namespace ordwalk::cli {

/// Exit statuses: 0 success, 1 precondition failure, 2 usage, 3 resource guard.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordwalk::cli
