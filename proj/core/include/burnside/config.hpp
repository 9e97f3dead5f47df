#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "burnside/bounds.hpp"

namespace burnside {

enum class OutputFormat { Text, Json };

struct Config {
  BoundConstants constants;
  double c_lower = 1;                   // catalog law-length lower bound constant
  std::uint64_t cayley_cap = 100000;
  std::uint64_t exhaust_cap = 100000000;
  std::uint64_t seed = 20240607;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::Text;

  /// Throws std::invalid_argument when c < 2, any constant is not
  /// positive, or a cap is zero.
  void validate() const;

  /// Keys match to_json(); missing keys keep their defaults, unknown keys
  /// are rejected. Throws ParseError or std::invalid_argument.
  static Config from_json(const nlohmann::json& j);
  static Config from_file(const std::string& path);
  /// Defaults, overridden by the file named in BURNSIDE_CONFIG if set.
  static Config from_environment();

  nlohmann::ordered_json to_json() const;
};

/// Library version string.
std::string version();

}  // namespace burnside
