/**
 * Command dispatch shared by the command-line binary and the test suite.
 * Every command reads one input document, writes a deterministic report
 * (human `key: value` lines or machine `key=value` lines; identical
 * numeric content) and yields an exit code:
 *
 *   0  every requested check passed
 *   1  a mathematical check failed
 *   2  the input document was rejected
 */

#ifndef HOMPRELIE_CLI_HPP
#define HOMPRELIE_CLI_HPP

#include <optional>
#include <string>

namespace homprelie {

struct CliOptions {
  bool machine = false;
  bool use_regular = false;  // force the regular representation
  bool dump_matrix = false;
  bool full = false;  // deform-verify: check through order 3N
  std::optional<std::size_t> degree;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> order;
};

struct CliResult {
  std::string output;
  int exit_code = 0;
};

extern const char* const kCommandNames[];
extern const std::size_t kCommandCount;

CliResult run_command(const std::string& command, const CliOptions& options,
                      const std::string& input_text);

}  // namespace homprelie

#endif
