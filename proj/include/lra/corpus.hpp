// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_CORPUS_HPP_
#define LRA_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lra {

/// Splits raw text into lowercased tokens. Runs of ASCII alphanumerics (and
/// any byte >= 0x80, so UTF-8 words stay intact) form tokens; everything else
/// separates them. The sentence terminators . ! ? additionally end the
/// current document segment: phrase windows never cross them.
struct TokenizedText {
  std::vector<std::vector<std::string>> documents;
};

TokenizedText tokenize(std::string_view text);

struct PhraseQuery {
  std::string left;   // stem of the first word
  std::string right;  // stem of the last word
  std::uint32_t min_inter = 0;
  std::uint32_t max_inter = 0;  // must be >= min_inter

  PhraseQuery(std::string left_stem, std::string right_stem, std::uint32_t min_i,
              std::uint32_t max_i);
};

struct PhraseMatch {
  std::uint32_t doc_id = 0;
  std::uint32_t start_pos = 0;
  std::vector<std::string> intervening;  // surface forms
};

/// Immutable tokenized corpus with a stem-keyed positional index.
///
/// Documents are sentence-delimited segments of the input files. Both query
/// endpoints are matched on Porter stems ("ignore suffixes"); intervening
/// tokens are reported as surface forms. Safe for concurrent reads once
/// built.
class Corpus {
 public:
  /// Tokenizes and indexes the given files (in the given order). Throws
  /// std::runtime_error naming the file on read failure, or "empty corpus"
  /// if no tokens survive.
  static Corpus build(const std::vector<std::filesystem::path>& files);

  /// Builds from in-memory text (used by tests and the Python bindings).
  static Corpus build_from_text(std::string_view text);

  static Corpus load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// Serialized image ("LRAIDX1" header). Byte-identical for identical input.
  std::string serialize() const;
  static Corpus deserialize(std::string_view bytes);

  /// Every window "left ... right" with min_inter..max_inter intervening
  /// tokens, endpoints stem-matched, ordered by (doc_id, start_pos, length).
  std::vector<PhraseMatch> find_phrases(const PhraseQuery& query) const;

  /// Number of windows of total length <= max_len that start with one of
  /// {a, b} and end with the other (stem-matched, 0..max_len-2 intervening).
  /// Each window is counted once, so the count is symmetric in a and b.
  std::uint64_t phrase_frequency(std::string_view a, std::string_view b,
                                 std::uint32_t max_len) const;

  /// Occurrences of the exact token sequence (surface forms, lowercased).
  std::uint64_t count_exact_phrase(const std::vector<std::string>& tokens) const;

  std::uint64_t token_count() const { return token_count_; }
  std::size_t document_count() const { return documents_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::string& token_at(std::uint32_t doc, std::uint32_t pos) const;
  const std::string& stem_of_token(std::string_view token) const;

 private:
  struct Posting {
    std::uint32_t doc;
    std::uint32_t pos;
  };

  void index_documents();
  std::uint64_t count_directed(std::uint32_t left_stem, std::uint32_t right_stem,
                               std::uint32_t min_inter, std::uint32_t max_inter) const;

  std::vector<std::string> vocab_;                    // surface forms, first-seen order
  std::unordered_map<std::string, std::uint32_t> vocab_index_;
  std::vector<std::uint32_t> token_stem_;             // token id -> stem id
  std::vector<std::string> stems_;
  std::unordered_map<std::string, std::uint32_t> stem_index_;
  std::vector<std::vector<std::uint32_t>> documents_;  // token ids
  std::vector<std::vector<Posting>> stem_postings_;    // stem id -> positions
  std::vector<std::vector<Posting>> token_postings_;   // token id -> positions
  std::uint64_t token_count_ = 0;
};

}  // namespace lra

#endif  // LRA_CORPUS_HPP_
