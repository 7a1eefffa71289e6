#pragma once

#include <iosfwd>

namespace axial {

// Exit codes: 0 verified or success, 1 verified false, 2 usage or IO error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace axial
