#ifndef IMSETS_CLI_HPP
#define IMSETS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "imsets/triangulate.hpp"

namespace imsets::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kGuard = 3, kInvariant = 4 };

enum class OutputMode { Text, KeyValue };

/// Flags override the environment (IMSETS_MAX_UNIVERSE, IMSETS_MAX_PER_COMPONENT,
/// IMSETS_MAX_PRODUCT, IMSETS_FORMAT, IMSETS_SEED), which overrides these defaults.
struct RunConfig {
  int max_universe = 10;
  Guards guards;
  OutputMode mode = OutputMode::Text;
  std::uint64_t seed = 1;
};

/// Result of one subcommand. Both output modes are rendered from it.
struct Report {
  /// Scalar facts, in order.
  std::vector<std::pair<std::string, std::string>> facts;
  /// Body lines keyed by section.
  std::vector<std::pair<std::string, std::string>> lines;
  /// Text mode prints the single fact's value alone.
  bool bare = false;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void line(std::string section, std::string text) { lines.emplace_back(std::move(section), std::move(text)); }
};

/// Text mode: body lines in the library's text formats, preceded by `# section`
/// when there is more than one section, with facts as `# key: value` comments
/// (or `key: value` lines when there is no body).
/// Key-value mode: `key=value` per fact and `section=line` per body line.
std::string render(const Report& r, OutputMode mode);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imsets::cli

#endif  // IMSETS_CLI_HPP
