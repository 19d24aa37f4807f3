// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_VSM_HPP_
#define LRA_VSM_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "lra/corpus.hpp"
#include "lra/word_pair.hpp"

namespace lra {

/// Joining terms for the vector space baseline, e.g. "of", "for the".
/// Multi-word terms are allowed; the list must be non-empty with no
/// duplicates.
struct JoiningTermList {
  std::vector<std::string> terms;

  /// One term per line, '#' comments and blank lines skipped.
  static JoiningTermList load(const std::filesystem::path& path);
  static JoiningTermList parse(std::string_view text,
                               std::string_view source_name = "<memory>");
};

/// The 2 x |terms| vector for a pair: element 2i counts the exact phrase
/// "A term_i B", element 2i+1 counts "B term_i A"; each element is
/// ln(count + 1).
std::vector<double> vsm_vector(const WordPair& pair, const Corpus& corpus,
                               const JoiningTermList& terms);

/// Cosine between the two pairs' VSM vectors (0 when either is zero).
double vsm_similarity(const WordPair& pair1, const WordPair& pair2, const Corpus& corpus,
                      const JoiningTermList& terms);

}  // namespace lra

#endif  // LRA_VSM_HPP_
