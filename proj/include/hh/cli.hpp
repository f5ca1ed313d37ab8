#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hh {

/// Run the command-line front-end. Exit codes: 0 satisfied/pass, 1 violated
/// or certification failure, 2 usage error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hh
