#ifndef AT2FF_CLI_HPP
#define AT2FF_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace at2ff::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kIoError = 2,
};

/// Runs one invocation; `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,3", "1..5" (inclusive) or a comma list mixing both.
/// Throws std::invalid_argument on malformed input.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

/// Comma separated percentages in [0, 100].
std::vector<double> parse_percent_list(std::string_view text);

}  // namespace at2ff::cli

#endif  // AT2FF_CLI_HPP
