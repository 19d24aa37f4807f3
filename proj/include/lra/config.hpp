// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_CONFIG_HPP_
#define LRA_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace lra {

/// All pipeline parameters. Defaults follow the original experiments:
/// 10 synonyms per member, 3 surviving alternates, phrases of at most 5
/// words (1..3 intervening), 4000 mined patterns, rank-300 projection.
struct LraConfig {
  std::uint32_t num_sim = 10;
  std::uint32_t max_phrase = 5;
  std::uint32_t num_filter = 3;
  std::uint32_t min_inter = 1;
  std::uint32_t max_inter = 3;
  std::uint32_t num_patterns = 4000;
  std::uint32_t k = 300;

  /// Enforces: all counts >= 1, min_inter <= max_inter, and
  /// max_inter == max_phrase - 2. Throws std::invalid_argument.
  void validate() const;

  /// Parses a flat key=value file ('#' comments, blank lines allowed) over
  /// the defaults. Unknown keys are an error.
  static LraConfig load(const std::filesystem::path& path);
  static LraConfig parse(std::string_view text, std::string_view source_name = "<memory>");

  std::string to_key_values() const;

  friend bool operator==(const LraConfig&, const LraConfig&) = default;
};

}  // namespace lra

#endif  // LRA_CONFIG_HPP_
