// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/pairspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lra {

std::vector<WordPair> PairVersions::versions() const {
  std::vector<WordPair> out;
  out.reserve(alternates.size() + 1);
  out.push_back(original);
  for (const auto& alt : alternates) out.push_back(alt.pair);
  return out;
}

std::vector<AlternatePair> generate_alternates(const WordPair& pair, const Thesaurus& thesaurus,
                                               std::uint32_t num_sim) {
  if (num_sim < 1) throw std::invalid_argument("generate_alternates: num_sim must be >= 1");
  std::vector<AlternatePair> candidates;
  std::set<WordPair> seen;
  seen.insert(pair);

  auto add = [&](WordPair candidate, AlternateSource source, std::uint32_t rank) {
    if (!seen.insert(candidate).second) return;
    candidates.push_back({std::move(candidate), source, rank, 0});
  };

  auto a_similar = thesaurus.top_similar(pair.a, pair.pos_a, num_sim);
  for (std::size_t r = 0; r < a_similar.size(); ++r) {
    const std::string& alt_a = a_similar[r];
    if (alt_a == pair.b) continue;  // would collapse to B:B
    add(WordPair(alt_a, pair.b, pair.pos_a, pair.pos_b), AlternateSource::kReplacedA,
        static_cast<std::uint32_t>(r));
  }
  auto b_similar = thesaurus.top_similar(pair.b, pair.pos_b, num_sim);
  for (std::size_t r = 0; r < b_similar.size(); ++r) {
    const std::string& alt_b = b_similar[r];
    if (alt_b == pair.a) continue;
    add(WordPair(pair.a, alt_b, pair.pos_a, pair.pos_b), AlternateSource::kReplacedB,
        static_cast<std::uint32_t>(r));
  }
  return candidates;
}

PairVersions filter_alternates(const WordPair& original, std::vector<AlternatePair> candidates,
                               const Corpus& corpus, std::uint32_t num_filter,
                               std::uint32_t max_phrase) {
  for (auto& c : candidates) {
    c.frequency = corpus.phrase_frequency(c.pair.a, c.pair.b, max_phrase);
  }
  std::erase_if(candidates, [](const AlternatePair& c) { return c.frequency == 0; });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const AlternatePair& x, const AlternatePair& y) {
                     if (x.frequency != y.frequency) return x.frequency > y.frequency;
                     if (x.rank != y.rank) return x.rank < y.rank;
                     return x.pair < y.pair;
                   });
  if (candidates.size() > num_filter) candidates.resize(num_filter);

  PairVersions out;
  out.original = original;
  out.alternates = std::move(candidates);
  return out;
}

}  // namespace lra
