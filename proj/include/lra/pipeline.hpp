// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_PIPELINE_HPP_
#define LRA_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lra/config.hpp"
#include "lra/decomposition.hpp"
#include "lra/evaluation.hpp"
#include "lra/similarity.hpp"
#include "lra/thesaurus.hpp"

namespace lra {

struct StageTiming {
  std::string name;
  double ms = 0.0;
};

/// Provenance record for one pipeline run: configuration, content digests of
/// all inputs, artifact paths and per-stage wall times. Identical digests
/// and config imply bit-identical outputs, which is what makes artifact
/// caching sound.
struct RunManifest {
  LraConfig config;
  std::string corpus_digest;
  std::string thesaurus_digest;
  std::string pairs_digest;
  std::vector<StageTiming> stages;

  std::size_t input_pairs = 0;
  std::size_t rows_before_drop = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nonzero_cells = 0;
  double density = 0.0;
  std::size_t k_eff = 0;
  std::size_t patterns_mined = 0;
  std::size_t dropped_rows = 0;

  std::string to_json() const;
  static RunManifest from_json(std::string_view text);

  /// True when the cached manifest matches this run's inputs and config.
  bool same_inputs(const RunManifest& other) const;
};

/// Everything steps 1-10 produce for one input set.
struct PipelineResult {
  LraConfig config;
  std::vector<PairVersions> pair_versions;  // aligned with the input pairs
  PatternTable pattern_table;
  ProjectedSpace space;
  RunManifest manifest;

  /// Version set for an input pair; throws std::invalid_argument
  /// ("pair not in pipeline run") for pairs outside the input set.
  const PairVersions& versions_for(const WordPair& pair) const;

  SimilarityResult similarity(const WordPair& pair1, const WordPair& pair2) const;
};

/// Runs steps 1-10 over the input pairs. Duplicated input pairs are
/// processed once. Stage failures are rethrown with the stage name.
PipelineResult run_pipeline(const LraConfig& config, const Corpus& corpus,
                            const Thesaurus& thesaurus, const std::vector<WordPair>& pairs,
                            std::string corpus_digest = "", std::string thesaurus_digest = "");

/// Artifact files written under an output directory.
struct ArtifactPaths {
  std::filesystem::path space;     // "space.bin"      (LRAPRJ1)
  std::filesystem::path versions;  // "versions.json"
  std::filesystem::path patterns;  // "patterns.tsv"
  std::filesystem::path manifest;  // "manifest.json"

  static ArtifactPaths in_dir(const std::filesystem::path& dir);
};

void save_artifacts(const PipelineResult& result, const std::filesystem::path& dir);

/// Loads a previously persisted run (space + versions + manifest); the
/// pattern table is not needed for similarity queries and is left empty.
PipelineResult load_artifacts(const std::filesystem::path& dir);

/// Loads the cached run if its manifest matches the given digests/config.
std::optional<PipelineResult> load_cached_run(const std::filesystem::path& dir,
                                              const LraConfig& config,
                                              const std::string& corpus_digest,
                                              const std::string& thesaurus_digest,
                                              const std::string& pairs_digest);

/// Pairs file: one "word word [pos pos]" per line.
std::vector<WordPair> load_pairs(const std::filesystem::path& path);
std::vector<WordPair> parse_pairs(std::string_view text,
                                  std::string_view source_name = "<memory>");

/// Serialized pair versions (JSON), used by `save_artifacts`.
std::string versions_to_json(const std::vector<PairVersions>& versions);
std::vector<PairVersions> versions_from_json(std::string_view text);

std::string pattern_table_to_tsv(const PatternTable& table);

}  // namespace lra

#endif  // LRA_PIPELINE_HPP_
