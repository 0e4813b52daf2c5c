#ifndef GP_CLI_HPP
#define GP_CLI_HPP

#include "gp/run.hpp"

#include <iosfwd>

namespace gp {

struct CliOptions {
    std::uint64_t seed = 0;
    Budget budget;
    int threads = 1;
    bool json = false;
};

// Subcommand drivers, callable in-process (the binary in tools/ is a thin
// argument parser over these). Exit codes:
//   run/trace: 0 result, 1 the sampled execution fails, 2 parse or static
//              error (including unreadable files), 3 step limit or stuck
//   all:       0 exploration complete, 2 errors, 3 budget-limited
//   check:     0 checked, 2 diagnostics reported
int cmd_run(const std::string& program_path, const std::string& host_path,
            const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_all(const std::string& program_path, const std::string& host_path,
            const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& program_path, std::ostream& out,
              std::ostream& err);
int cmd_trace(const std::string& program_path, const std::string& host_path,
              const CliOptions& opt, std::ostream& out, std::ostream& err);

} // namespace gp

#endif
