// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lra/stemmer.hpp"

namespace lra {

bool Pattern::matches(const std::vector<std::string>& intervening) const {
  if (intervening.size() != slots.size()) return false;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].wildcard && slots[i].word != intervening[i]) return false;
  }
  return true;
}

std::size_t Pattern::wildcard_count() const {
  std::size_t n = 0;
  for (const auto& s : slots) {
    if (s.wildcard) ++n;
  }
  return n;
}

std::string Pattern::render() const {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.append(slots[i].wildcard ? "*" : slots[i].word);
  }
  return out;
}

Pattern Pattern::parse(std::string_view rendered) {
  Pattern p;
  std::size_t start = 0;
  while (start < rendered.size()) {
    std::size_t sp = rendered.find(' ', start);
    std::string_view tok = rendered.substr(start, sp == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : sp - start);
    if (tok == "*") {
      p.slots.push_back({true, ""});
    } else if (!tok.empty()) {
      p.slots.push_back({false, std::string(tok)});
    }
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return p;
}

bool operator<(const Pattern& x, const Pattern& y) {
  std::size_t n = std::min(x.slots.size(), y.slots.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& sx = x.slots[i];
    const auto& sy = y.slots[i];
    if (sx.wildcard != sy.wildcard) return !sx.wildcard;  // literal < wildcard
    if (!sx.wildcard && sx.word != sy.word) return sx.word < sy.word;
  }
  return x.slots.size() < y.slots.size();
}

PhraseTable harvest_phrases(const std::vector<PairVersions>& pair_versions, const Corpus& corpus,
                            std::uint32_t min_inter, std::uint32_t max_inter) {
  PhraseTable table;
  for (const auto& pv : pair_versions) {
    for (const WordPair& version : pv.versions()) {
      auto [it, inserted] = table.try_emplace(version);
      if (!inserted) continue;  // already harvested for another input pair
      auto& phrases = it->second;
      const std::string stem_a = porter_stem(version.a);
      const std::string stem_b = porter_stem(version.b);
      for (auto& m : corpus.find_phrases(PhraseQuery(stem_a, stem_b, min_inter, max_inter))) {
        phrases.push_back({PhraseDirection::kForward, std::move(m.intervening)});
      }
      for (auto& m : corpus.find_phrases(PhraseQuery(stem_b, stem_a, min_inter, max_inter))) {
        phrases.push_back({PhraseDirection::kReverse, std::move(m.intervening)});
      }
    }
  }
  return table;
}

std::vector<Pattern> expand_patterns(const std::vector<std::string>& intervening,
                                     std::uint32_t max_inter) {
  const std::size_t m = intervening.size();
  if (m == 0 || m > max_inter) {
    throw std::invalid_argument("expand_patterns: intervening length out of [1, max_inter]");
  }
  std::vector<Pattern> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Pattern p;
    p.slots.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        p.slots.push_back({true, ""});
      } else {
        p.slots.push_back({false, intervening[i]});
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

PatternTable mine_top_patterns(const PhraseTable& phrases, std::uint32_t num_patterns,
                               std::uint32_t max_inter) {
  // Pattern -> number of distinct pair versions. Each pair contributes at
  // most once per pattern, so patterns seen for the current pair are
  // deduplicated before counting.
  std::unordered_map<std::string, std::uint64_t> support;
  for (const auto& [pair, occs] : phrases) {
    std::unordered_set<std::string> seen_for_pair;
    for (const auto& occ : occs) {
      for (const Pattern& p : expand_patterns(occ.intervening, max_inter)) {
        seen_for_pair.insert(p.render());
      }
    }
    for (const auto& rendered : seen_for_pair) ++support[rendered];
  }

  struct Mined {
    Pattern pattern;
    std::uint64_t count;
  };
  std::vector<Mined> mined;
  mined.reserve(support.size());
  for (const auto& [rendered, count] : support) {
    mined.push_back({Pattern::parse(rendered), count});
  }
  std::sort(mined.begin(), mined.end(), [](const Mined& x, const Mined& y) {
    if (x.count != y.count) return x.count > y.count;
    std::size_t wx = x.pattern.wildcard_count();
    std::size_t wy = y.pattern.wildcard_count();
    if (wx != wy) return wx < wy;
    return x.pattern < y.pattern;
  });
  if (mined.size() > num_patterns) mined.resize(num_patterns);

  PatternTable table;
  table.patterns.reserve(mined.size());
  table.support.reserve(mined.size());
  for (auto& m : mined) {
    table.patterns.push_back(std::move(m.pattern));
    table.support.push_back(m.count);
  }
  return table;
}

}  // namespace lra
