#pragma once

namespace rg {

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

int run(int argc, char** argv);

}  // namespace rg
