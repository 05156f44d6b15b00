// cli.hpp - command line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qivar::cli {

// Exit codes: 0 success, 1 verification or assertion failure, 2 usage or
// configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace qivar::cli
