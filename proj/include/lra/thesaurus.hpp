// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_THESAURUS_HPP_
#define LRA_THESAURUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lra/word_pair.hpp"

namespace lra {

struct ThesaurusNeighbor {
  std::string word;
  double score = 0.0;  // attributional similarity, (0, 1]
};

struct ThesaurusEntry {
  std::string headword;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::vector<ThesaurusNeighbor> neighbors;  // non-increasing score
};

/// Ranked-synonym thesaurus, immutable once loaded.
///
/// File format, one entry per line:
///   headword<TAB>pos<TAB>word:score,word:score,...
/// with pos in {noun, verb, adj, adv} and scores in (0, 1], non-increasing.
class Thesaurus {
 public:
  /// Parses the file. Malformed lines, out-of-order scores and duplicate
  /// (headword, pos) entries raise std::runtime_error with the line number.
  static Thesaurus load(const std::filesystem::path& path);
  static Thesaurus parse(std::string_view text, std::string_view source_name = "<memory>");

  /// First min(n, available) neighbor words, best first. Unknown
  /// (word, pos) yields an empty list.
  std::vector<std::string> top_similar(std::string_view word, PartOfSpeech pos,
                                       std::size_t n) const;

  const ThesaurusEntry* find(std::string_view word, PartOfSpeech pos) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<ThesaurusEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;  // "word\tpos" -> entry
};

}  // namespace lra

#endif  // LRA_THESAURUS_HPP_
