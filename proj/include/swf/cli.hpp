#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swf::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0 ok,
/// 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swf::cli
