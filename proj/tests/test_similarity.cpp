// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include <doctest.h>

#include "lra/pipeline.hpp"
#include "lra/similarity.hpp"
#include "test_helpers.hpp"

using namespace lra;
using namespace lra::testing;

namespace {

/// One pipeline run over the fixture question pairs, shared by the cases.
const PipelineResult& toy_run() {
  static PipelineResult result = [] {
    Thesaurus thesaurus = Thesaurus::load(toy_dir() / "thesaurus.tsv");
    std::vector<WordPair> pairs = load_pairs(toy_dir() / "pairs.txt");
    return run_pipeline(LraConfig{}, toy_corpus(), thesaurus, pairs);
  }();
  return result;
}

}  // namespace

TEST_CASE("cosine basics") {
  CHECK(cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
  CHECK(cosine(std::vector<double>{2, 0}, std::vector<double>{1, 0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cosine(std::vector<double>{1, 0}, std::vector<double>{1, 1}) ==
        doctest::Approx(0.70710678118654752).epsilon(1e-12));
  CHECK(cosine(std::vector<double>{0, 0}, std::vector<double>{1, 1}) == 0.0);
  CHECK_THROWS_AS(cosine(std::vector<double>{1}, std::vector<double>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("self-similarity of an attested pair is exactly one") {
  const PipelineResult& run = toy_run();
  SimilarityResult self = run.similarity(WordPair("cat", "meow"), WordPair("cat", "meow"));
  CHECK(self.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(self.original_cosine == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("value never falls below the original cosine") {
  const PipelineResult& run = toy_run();
  std::vector<WordPair> pairs = load_pairs(toy_dir() / "pairs.txt");
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      SimilarityResult r = run.similarity(p, q);
      CHECK(r.value >= r.original_cosine - 1e-12);
      CHECK(r.value >= -1.0);
      CHECK(r.value <= 1.0);
      CHECK(r.cosines_considered >= 1);
    }
  }
}

TEST_CASE("similarity is symmetric in its arguments") {
  const PipelineResult& run = toy_run();
  const std::pair<const char*, const char*> probes[] = {
      {"cat", "meow"}, {"mason", "stone"}, {"bottle", "water"}, {"hammer", "nail"}};
  for (const auto& [a1, b1] : probes) {
    for (const auto& [a2, b2] : probes) {
      double xy = run.similarity(WordPair(a1, b1), WordPair(a2, b2)).value;
      double yx = run.similarity(WordPair(a2, b2), WordPair(a1, b1)).value;
      CHECK(xy == doctest::Approx(yx).epsilon(1e-14));
    }
  }
}

TEST_CASE("value matches a hand recomputation from the persisted space") {
  const PipelineResult& run = toy_run();
  // Round-trip through the persisted form, then redo steps 11-12 from
  // scratch: gather version rows, compute all cosines, filter, average.
  ProjectedSpace space = ProjectedSpace::deserialize(run.space.serialize());

  auto recompute = [&](const PairVersions& pv1, const PairVersions& pv2) {
    auto row_of = [&](const WordPair& p) { return space.vector_for(p); };
    std::vector<std::optional<Eigen::VectorXd>> rows1, rows2;
    for (const auto& v : pv1.versions()) rows1.push_back(row_of(v));
    for (const auto& v : pv2.versions()) rows2.push_back(row_of(v));
    auto cos0 = [&](const std::optional<Eigen::VectorXd>& u,
                    const std::optional<Eigen::VectorXd>& v) {
      if (!u || !v || u->norm() == 0.0 || v->norm() == 0.0) return 0.0;
      return std::clamp(u->dot(*v) / (u->norm() * v->norm()), -1.0, 1.0);
    };
    double original = cos0(rows1[0], rows2[0]);
    double sum = 0.0;
    int n = 0;
    for (const auto& u : rows1) {
      for (const auto& v : rows2) {
        double c = cos0(u, v);
        if (c >= original) {
          sum += c;
          ++n;
        }
      }
    }
    return std::pair<double, int>(sum / n, n);
  };

  const std::pair<const char*, const char*> comparisons[] = {
      {"cat", "meow"}, {"dog", "bark"}, {"mason", "stone"}, {"kitten", "cat"}};
  for (const auto& [a, b] : comparisons) {
    for (const auto& [c, d] : comparisons) {
      const PairVersions& pv1 = run.versions_for(WordPair(a, b));
      const PairVersions& pv2 = run.versions_for(WordPair(c, d));
      auto [want_value, want_n] = recompute(pv1, pv2);
      SimilarityResult got = relational_similarity(pv1, pv2, space);
      CHECK(got.value == doctest::Approx(want_value).epsilon(1e-12));
      CHECK(static_cast<int>(got.cosines_considered) == want_n);
    }
  }
}

TEST_CASE("pairs with no surviving rows score zero") {
  // A fresh mini-pipeline whose second pair never co-occurs in the corpus.
  Corpus corpus = Corpus::build_from_text(
      "mason carves the stone. mason shapes the stone. carpenter shapes the wood. "
      "carpenter carves wood. ghost word. spirit elsewhere");
  Thesaurus thesaurus = Thesaurus::parse("mason\tnoun\tbuilder:0.9\n");
  std::vector<WordPair> pairs = {WordPair("mason", "stone"), WordPair("carpenter", "wood"),
                                 WordPair("ghost", "spirit")};
  PipelineResult run = run_pipeline(LraConfig{}, corpus, thesaurus, pairs);

  SimilarityResult absent =
      run.similarity(WordPair("ghost", "spirit"), WordPair("mason", "stone"));
  CHECK(absent.value == 0.0);
  CHECK(absent.original_cosine == 0.0);
  SimilarityResult both =
      run.similarity(WordPair("ghost", "spirit"), WordPair("ghost", "spirit"));
  CHECK(both.value == 0.0);
}

TEST_CASE("querying a pair outside the input set is an error") {
  const PipelineResult& run = toy_run();
  CHECK_THROWS_WITH_AS(run.similarity(WordPair("quart", "volume"), WordPair("cat", "meow")),
                       doctest::Contains("pair not in pipeline run"), std::invalid_argument);
}
