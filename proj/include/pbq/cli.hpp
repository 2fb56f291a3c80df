#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbq {

// Command-line front end. Exit codes: 0 success (and verified, where a
// verdict exists), 1 failed verification, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pbq
