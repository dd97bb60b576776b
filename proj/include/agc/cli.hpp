#pragma once

#include <string>
#include <vector>

namespace agc {

/// Entry point of the command line tool. args excludes the program
/// name. Exit codes: 0 success / all checks passed, 1 usage or input
/// error, 2 verification failure, 3 exhaustion budget refused.
int cli_run(const std::vector<std::string>& args);

int cli_run(int argc, const char* const* argv);

}  // namespace agc
