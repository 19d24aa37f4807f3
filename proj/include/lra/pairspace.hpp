// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_PAIRSPACE_HPP_
#define LRA_PAIRSPACE_HPP_

#include <cstdint>
#include <vector>

#include "lra/corpus.hpp"
#include "lra/thesaurus.hpp"
#include "lra/word_pair.hpp"

namespace lra {

enum class AlternateSource { kReplacedA, kReplacedB };

/// A candidate pair derived from an original by substituting one member with
/// a thesaurus synonym. `rank` is the synonym's position in its neighbor
/// list (0 = most similar); `frequency` is filled in by filter_alternates.
struct AlternatePair {
  WordPair pair;
  AlternateSource source = AlternateSource::kReplacedA;
  std::uint32_t rank = 0;
  std::uint64_t frequency = 0;
};

/// The version set of one input pair: the original plus at most num_filter
/// corpus-supported alternates, sorted by non-increasing frequency.
struct PairVersions {
  WordPair original;
  std::vector<AlternatePair> alternates;

  /// Directed pairs of all versions, original first.
  std::vector<WordPair> versions() const;
};

/// Thesaurus reformulations of `pair`: A':B for the top num_sim words
/// similar to A, and A:B' likewise for B. Candidates that collapse to a
/// repeated word or reproduce the original are dropped, as are duplicates.
std::vector<AlternatePair> generate_alternates(const WordPair& pair, const Thesaurus& thesaurus,
                                               std::uint32_t num_sim);

/// Scores each candidate by corpus phrase frequency (both orders, phrases of
/// at most max_phrase words) and keeps the top num_filter. Zero-frequency
/// candidates never survive. Ties break by (thesaurus rank, then pair words),
/// so the result is deterministic.
PairVersions filter_alternates(const WordPair& original, std::vector<AlternatePair> candidates,
                               const Corpus& corpus, std::uint32_t num_filter,
                               std::uint32_t max_phrase);

}  // namespace lra

#endif  // LRA_PAIRSPACE_HPP_
