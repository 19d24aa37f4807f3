// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include <doctest.h>

#include <random>

#include "lra/corpus.hpp"
#include "test_helpers.hpp"

using namespace lra;
using namespace lra::testing;

TEST_CASE("one file with three words") {
  Corpus c = Corpus::build_from_text("the cat sat");
  CHECK(c.token_count() == 3);
  CHECK(c.document_count() == 1);
}

TEST_CASE("empty input is a build error") {
  CHECK_THROWS_WITH_AS(Corpus::build({}), doctest::Contains("empty corpus"),
                       std::runtime_error);
  CHECK_THROWS_AS(Corpus::build_from_text("... !!"), std::runtime_error);
}

TEST_CASE("unreadable file error names the file") {
  CHECK_THROWS_WITH_AS(Corpus::build({"/no/such/lra-file.txt"}),
                       doctest::Contains("lra-file.txt"), std::runtime_error);
}

TEST_CASE("sentence terminators split documents") {
  Corpus c = Corpus::build_from_text("cat chases dog. dog bites cat");
  CHECK(c.document_count() == 2);
  CHECK(c.phrase_frequency("cat", "dog", 5) == 2);
}

TEST_CASE("find_phrases finds a planted window") {
  Corpus c = Corpus::build_from_text("food for the plant");
  auto matches = c.find_phrases(PhraseQuery("food", "plant", 1, 3));
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].intervening == std::vector<std::string>{"for", "the"});

  CHECK(c.find_phrases(PhraseQuery("plant", "food", 1, 3)).empty());
}

TEST_CASE("phrase_frequency counts both orders and respects the window") {
  Corpus c = Corpus::build_from_text("cat chases dog. dog bites cat");
  CHECK(c.phrase_frequency("cat", "dog", 5) == 2);
  CHECK(c.phrase_frequency("dog", "cat", 5) == 2);  // symmetric
  CHECK(c.phrase_frequency("cat", "cat", 5) == 0);
  CHECK(c.phrase_frequency("cat", "unicorn", 5) == 0);
  CHECK_THROWS_AS(c.phrase_frequency("cat", "dog", 1), std::invalid_argument);
}

TEST_CASE("endpoints are matched on stems") {
  Corpus c = Corpus::build_from_text("printer prints pages. printers print the page");
  CHECK(c.phrase_frequency("printer", "page", 5) == 2);
  CHECK(c.phrase_frequency("printing", "paged", 5) == 2);
}

TEST_CASE("fixture token count matches the independent scan") {
  // Frozen from tests/oracles/count_tokens.py over the bundled corpus.
  CHECK(toy_corpus().token_count() == 73739);
}

TEST_CASE("find_phrases equals a naive window scan on the fixture") {
  const Corpus& corpus = toy_corpus();
  const auto& docs = toy_documents();

  std::mt19937 rng(20240811);
  std::vector<std::string> probes = {"cat",  "meow",  "mason", "stone", "bottle",
                                     "water", "kitten", "hammer", "nail", "house",
                                     "garden", "says",  "will",  "dog",  "bark"};
  for (int i = 0; i < 20; ++i) {
    std::string left = porter_stem(probes[rng() % probes.size()]);
    std::string right = porter_stem(probes[rng() % probes.size()]);
    std::uint32_t min_inter = rng() % 2;
    std::uint32_t max_inter = min_inter + rng() % 3;
    CAPTURE(left, right, min_inter, max_inter);

    auto got = corpus.find_phrases(PhraseQuery(left, right, min_inter, max_inter));
    auto want = naive_find_phrases(docs, left, right, min_inter, max_inter);
    REQUIRE(got.size() == want.size());
    // The index orders matches by (doc, start, length); so does the scan.
    for (std::size_t m = 0; m < got.size(); ++m) {
      CHECK(got[m].intervening == want[m].intervening);
    }
  }
}

TEST_CASE("phrase_frequency equals the naive count on the fixture") {
  const Corpus& corpus = toy_corpus();
  const auto& docs = toy_documents();
  const std::pair<const char*, const char*> pairs[] = {
      {"cat", "meow"}, {"mason", "stone"}, {"feline", "meow"}, {"bottle", "water"},
      {"house", "garden"}, {"cat", "dog"}};
  for (const auto& [a, b] : pairs) {
    for (std::uint32_t len : {2u, 3u, 5u}) {
      CAPTURE(a, b, len);
      CHECK(corpus.phrase_frequency(a, b, len) == naive_phrase_frequency(docs, a, b, len));
    }
  }
}

TEST_CASE("phrase_frequency is monotone in the window and symmetric") {
  const Corpus& corpus = toy_corpus();
  const std::pair<const char*, const char*> pairs[] = {
      {"cat", "meow"}, {"mason", "stone"}, {"hammer", "nail"}, {"house", "garden"}};
  for (const auto& [a, b] : pairs) {
    std::uint64_t prev = 0;
    for (std::uint32_t len = 2; len <= 8; ++len) {
      std::uint64_t f = corpus.phrase_frequency(a, b, len);
      CHECK(f >= prev);
      CHECK(f == corpus.phrase_frequency(b, a, len));
      prev = f;
    }
  }
}

TEST_CASE("serialized index is byte-identical across builds and round-trips") {
  Corpus c1 = Corpus::build(toy_corpus_files());
  Corpus c2 = Corpus::build(toy_corpus_files());
  std::string bytes1 = c1.serialize();
  CHECK(bytes1 == c2.serialize());
  CHECK(bytes1.substr(0, 7) == "LRAIDX1");

  Corpus loaded = Corpus::deserialize(bytes1);
  CHECK(loaded.token_count() == c1.token_count());
  CHECK(loaded.document_count() == c1.document_count());
  CHECK(loaded.phrase_frequency("cat", "meow", 5) == c1.phrase_frequency("cat", "meow", 5));
  CHECK(loaded.serialize() == bytes1);
}

TEST_CASE("exact phrase counting is surface-form exact") {
  Corpus c = Corpus::build_from_text("food for the plant. food for a plant. foods for the plant");
  CHECK(c.count_exact_phrase({"food", "for", "the", "plant"}) == 1);
  CHECK(c.count_exact_phrase({"food", "for", "a", "plant"}) == 1);
  CHECK(c.count_exact_phrase({"food", "plant"}) == 0);
  CHECK(c.count_exact_phrase({"missing", "word"}) == 0);
}

TEST_CASE("tokenizer lowercases and keeps digits") {
  TokenizedText tt = tokenize("The CAT-sat, on 42 mats!");
  REQUIRE(tt.documents.size() == 1);
  CHECK(tt.documents[0] ==
        std::vector<std::string>{"the", "cat", "sat", "on", "42", "mats"});
}
