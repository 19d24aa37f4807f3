// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_WORD_PAIR_HPP_
#define LRA_WORD_PAIR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include "lra/util.hpp"

namespace lra {

enum class PartOfSpeech { kNoun, kVerb, kAdj, kAdv };

std::string_view to_string(PartOfSpeech pos);
PartOfSpeech parse_pos(std::string_view s);

/// An ordered pair of words whose relation is being measured. Words are
/// stored lowercased; the two members must differ.
struct WordPair {
  std::string a;
  std::string b;
  PartOfSpeech pos_a = PartOfSpeech::kNoun;
  PartOfSpeech pos_b = PartOfSpeech::kNoun;

  WordPair() = default;
  WordPair(std::string_view a_in, std::string_view b_in,
           PartOfSpeech pa = PartOfSpeech::kNoun, PartOfSpeech pb = PartOfSpeech::kNoun)
      : a(lowercase_ascii(a_in)), b(lowercase_ascii(b_in)), pos_a(pa), pos_b(pb) {
    if (a.empty() || b.empty()) throw std::invalid_argument("WordPair: empty word");
    if (a == b) throw std::invalid_argument("WordPair: members must differ: " + a);
  }

  WordPair reversed() const { return WordPair(b, a, pos_b, pos_a); }

  /// Word identity only; part of speech does not participate in equality.
  friend bool operator==(const WordPair& x, const WordPair& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const WordPair& x, const WordPair& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }

  std::string key() const { return a + ":" + b; }
};

}  // namespace lra

#endif  // LRA_WORD_PAIR_HPP_
