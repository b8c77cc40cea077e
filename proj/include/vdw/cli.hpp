#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vdw::cli
{
    /// Runs the command line front end. args[0] is the program name. Returns
    /// 0 on success, 1 on a failed or improper outcome, 2 on argument errors.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
