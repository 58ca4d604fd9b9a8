#ifndef LHULL_ANALYSIS_HPP_
#define LHULL_ANALYSIS_HPP_

#include <exception>
#include <string>
#include <vector>

#include "lhull/config.hpp"

namespace lhull {

  struct RunOptions {
    Bounds bounds;
    bool machine = false;
    bool oracle  = false;
    std::string out_dir;  // matrix files; empty prints them inline
  };

  struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
  };

  std::vector<std::string> subcommands();

  // Runs one subcommand and maps errors to exit statuses:
  // 2 parse or usage, 3 unsupported operation, 1 invariant failure.
  RunResult run_command(std::string const& subcommand,
                        Config const& cfg,
                        RunOptions const& opt);

  // Status and message for a library error; rethrows anything else.
  RunResult error_result(std::exception_ptr error);

}  // namespace lhull

#endif  // LHULL_ANALYSIS_HPP_
