// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_PATTERNS_HPP_
#define LRA_PATTERNS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lra/corpus.hpp"
#include "lra/pairspace.hpp"

namespace lra {

/// A template over the words between a pair's members. Each slot is either a
/// literal surface token or a wildcard matching exactly one token, so a
/// pattern of length m matches only intervening sequences of length m.
struct Pattern {
  struct Slot {
    bool wildcard = false;
    std::string word;  // empty when wildcard
  };
  std::vector<Slot> slots;

  bool matches(const std::vector<std::string>& intervening) const;
  std::size_t wildcard_count() const;

  /// Canonical text form: tokens space-separated, "*" for wildcards.
  std::string render() const;
  static Pattern parse(std::string_view rendered);

  friend bool operator==(const Pattern&, const Pattern&) = default;

  /// Deterministic total order used for tie-breaking: slot-wise, literals
  /// before wildcards, literals by word; prefixes sort first.
  friend bool operator<(const Pattern& x, const Pattern& y);
};

enum class PhraseDirection : std::uint8_t { kForward = 0, kReverse = 1 };

/// One corpus occurrence for a pair: the intervening surface tokens and
/// whether the pair's first member came first (forward) or last (reverse).
struct HarvestedPhrase {
  PhraseDirection direction = PhraseDirection::kForward;
  std::vector<std::string> intervening;
};

/// All phrase occurrences per distinct pair version. Keyed by the directed
/// pair (a, b); both search directions are stored under the one key.
using PhraseTable = std::map<WordPair, std::vector<HarvestedPhrase>>;

/// Step-3 search: for every distinct version of every input pair, collects
/// all corpus windows "a .. b" (forward) and "b .. a" (reverse) with
/// min_inter..max_inter intervening tokens, endpoints stem-matched.
PhraseTable harvest_phrases(const std::vector<PairVersions>& pair_versions, const Corpus& corpus,
                            std::uint32_t min_inter, std::uint32_t max_inter);

/// All 2^m wildcard variants of one intervening sequence.
/// Length 0 or > max_inter is a contract violation.
std::vector<Pattern> expand_patterns(const std::vector<std::string>& intervening,
                                     std::uint32_t max_inter);

struct PatternTable {
  std::vector<Pattern> patterns;       // non-increasing support
  std::vector<std::uint64_t> support;  // distinct pair versions matching

  std::size_t size() const { return patterns.size(); }
};

/// Step-4 mining: support counts distinct pair versions (not occurrences)
/// with at least one matching phrase in either direction. Keeps the top
/// num_patterns; ties break by (fewer wildcards, pattern order).
PatternTable mine_top_patterns(const PhraseTable& phrases, std::uint32_t num_patterns,
                               std::uint32_t max_inter);

}  // namespace lra

#endif  // LRA_PATTERNS_HPP_
