#pragma once

#include "holex/bundle.hpp"
#include "holex/surface.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holex {

enum class Command { m, delta, chi, decide, blowup, pushforward, check };
enum class OutputFormat { text, structured };

const char* to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Malformed configuration. `line` and `column` are 1-based and zero for
/// errors that are not tied to a position.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One CLI invocation. The surface and bundle come from the config file;
/// the remaining fields come from command-line flags.
struct JobConfig {
  SurfaceModel surface;
  BundleTopology bundle;
  Command command = Command::decide;
  std::uint64_t seed = 0;
  int radius = 3;
  OutputFormat format = OutputFormat::text;
  bool strict = false;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Parses the [surface] / [bundle] key-value grammar:
///
///   # comment
///   [surface]
///   kind = k3 | class7 | generic
///   gram = -2,0; 0,-1
///   chi_o = 2                 (default: 2 for k3, 0 otherwise)
///   anticanonical = 0,0       (default: zero vector)
///   a_x = 0 | 1               (default: 0)
///   vii_applicable = true | false   (default: false)
///   [bundle]
///   rank = 2
///   c1 = 1,0
///   c1_in_ns = true | false   (default: true)
///   c2 = 0
///
/// Throws ConfigError for syntax and structural errors and DomainError when
/// the lattice is not negative semi-definite.
JobConfig parse_config(std::string_view text);

/// Canonical config text with every field spelled out; parse_config of the
/// result reproduces the surface and bundle exactly.
std::string print_config(const JobConfig& config);

}  // namespace holex
