#pragma once

#include <iosfwd>

namespace solgeom::cli {

// Full command-line entry point. Returns the process exit status:
//   0 success, 1 numerical failure, 2 configuration error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solgeom::cli
