// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/pipeline.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"  // vendored nlohmann/json
#include "lra/util.hpp"

namespace lra {

using json = nlohmann::json;

namespace {

json config_to_json(const LraConfig& c) {
  return json{{"num_sim", c.num_sim},   {"max_phrase", c.max_phrase},
              {"num_filter", c.num_filter}, {"min_inter", c.min_inter},
              {"max_inter", c.max_inter},   {"num_patterns", c.num_patterns},
              {"k", c.k}};
}

LraConfig config_from_json(const json& j) {
  LraConfig c;
  c.num_sim = j.at("num_sim").get<std::uint32_t>();
  c.max_phrase = j.at("max_phrase").get<std::uint32_t>();
  c.num_filter = j.at("num_filter").get<std::uint32_t>();
  c.min_inter = j.at("min_inter").get<std::uint32_t>();
  c.max_inter = j.at("max_inter").get<std::uint32_t>();
  c.num_patterns = j.at("num_patterns").get<std::uint32_t>();
  c.k = j.at("k").get<std::uint32_t>();
  return c;
}

}  // namespace

std::string RunManifest::to_json() const {
  json j;
  j["config"] = config_to_json(config);
  j["inputs"] = {{"corpus_digest", corpus_digest},
                 {"thesaurus_digest", thesaurus_digest},
                 {"pairs_digest", pairs_digest}};
  json stage_list = json::array();
  for (const auto& s : stages) stage_list.push_back({{"name", s.name}, {"ms", s.ms}});
  j["stages"] = stage_list;
  j["stats"] = {{"input_pairs", input_pairs},
                {"rows_before_drop", rows_before_drop},
                {"rows", rows},
                {"cols", cols},
                {"nonzero_cells", nonzero_cells},
                {"density", density},
                {"k_eff", k_eff},
                {"patterns_mined", patterns_mined},
                {"dropped_rows", dropped_rows}};
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(std::string_view text) {
  json j = json::parse(text);
  RunManifest m;
  m.config = config_from_json(j.at("config"));
  m.corpus_digest = j.at("inputs").at("corpus_digest").get<std::string>();
  m.thesaurus_digest = j.at("inputs").at("thesaurus_digest").get<std::string>();
  m.pairs_digest = j.at("inputs").at("pairs_digest").get<std::string>();
  for (const auto& s : j.at("stages")) {
    m.stages.push_back({s.at("name").get<std::string>(), s.at("ms").get<double>()});
  }
  const auto& stats = j.at("stats");
  m.input_pairs = stats.at("input_pairs").get<std::size_t>();
  m.rows_before_drop = stats.at("rows_before_drop").get<std::size_t>();
  m.rows = stats.at("rows").get<std::size_t>();
  m.cols = stats.at("cols").get<std::size_t>();
  m.nonzero_cells = stats.at("nonzero_cells").get<std::size_t>();
  m.density = stats.at("density").get<double>();
  m.k_eff = stats.at("k_eff").get<std::size_t>();
  m.patterns_mined = stats.at("patterns_mined").get<std::size_t>();
  m.dropped_rows = stats.at("dropped_rows").get<std::size_t>();
  return m;
}

bool RunManifest::same_inputs(const RunManifest& other) const {
  return config == other.config && corpus_digest == other.corpus_digest &&
         thesaurus_digest == other.thesaurus_digest && pairs_digest == other.pairs_digest;
}

const PairVersions& PipelineResult::versions_for(const WordPair& pair) const {
  for (const auto& pv : pair_versions) {
    if (pv.original == pair) return pv;
  }
  throw std::invalid_argument("pair not in pipeline run: " + pair.key());
}

SimilarityResult PipelineResult::similarity(const WordPair& pair1, const WordPair& pair2) const {
  return relational_similarity(versions_for(pair1), versions_for(pair2), space);
}

PipelineResult run_pipeline(const LraConfig& config, const Corpus& corpus,
                            const Thesaurus& thesaurus, const std::vector<WordPair>& pairs,
                            std::string corpus_digest, std::string thesaurus_digest) {
  config.validate();
  if (pairs.empty()) {
    throw std::runtime_error("pipeline stage find_alternates: empty input pair set");
  }

  PipelineResult result;
  result.config = config;
  RunManifest& manifest = result.manifest;
  manifest.config = config;
  manifest.corpus_digest = std::move(corpus_digest);
  manifest.thesaurus_digest = std::move(thesaurus_digest);

  // Duplicate input pairs collapse into one version set (and later one row
  // pair); versions_for still resolves every requested duplicate.
  std::vector<WordPair> unique_pairs;
  {
    std::set<WordPair> seen;
    for (const auto& p : pairs) {
      if (seen.insert(p).second) unique_pairs.push_back(p);
    }
  }
  manifest.input_pairs = unique_pairs.size();
  {
    std::string digest_src;
    for (const auto& p : unique_pairs) {
      digest_src += p.key();
      digest_src += '\n';
    }
    manifest.pairs_digest = content_digest(digest_src);
  }

  auto run_stage = [&](const char* name, auto&& fn) {
    Stopwatch watch;
    try {
      fn();
    } catch (const std::exception& e) {
      throw std::runtime_error("pipeline stage " + std::string(name) + ": " + e.what());
    }
    manifest.stages.push_back({name, watch.elapsed_ms()});
  };

  // Steps 1-2: thesaurus reformulations, corpus-frequency filtering.
  std::vector<std::vector<AlternatePair>> candidates(unique_pairs.size());
  run_stage("find_alternates", [&] {
    for (std::size_t i = 0; i < unique_pairs.size(); ++i) {
      candidates[i] = generate_alternates(unique_pairs[i], thesaurus, config.num_sim);
    }
  });
  run_stage("filter_alternates", [&] {
    result.pair_versions.reserve(unique_pairs.size());
    for (std::size_t i = 0; i < unique_pairs.size(); ++i) {
      result.pair_versions.push_back(filter_alternates(unique_pairs[i], std::move(candidates[i]),
                                                       corpus, config.num_filter,
                                                       config.max_phrase));
    }
  });

  // Steps 3-4: phrase harvest and pattern mining.
  PhraseTable phrases;
  run_stage("find_phrases", [&] {
    phrases = harvest_phrases(result.pair_versions, corpus, config.min_inter, config.max_inter);
  });
  run_stage("find_patterns", [&] {
    result.pattern_table = mine_top_patterns(phrases, config.num_patterns, config.max_inter);
  });
  manifest.patterns_mined = result.pattern_table.size();

  // Steps 5-8: maps, sparse matrix, log-entropy weighting.
  RowMap provisional_rows;
  run_stage("map_rows", [&] { provisional_rows = map_pairs_to_rows(result.pair_versions); });
  std::optional<ColumnMap> columns;
  run_stage("map_columns", [&] { columns.emplace(result.pattern_table); });

  MatrixBuildResult built;
  run_stage("build_matrix", [&] {
    built = build_matrix(result.pair_versions, phrases, result.pattern_table, config.max_inter);
  });
  manifest.rows_before_drop = built.rows_before_drop;
  manifest.rows = built.matrix.rows;
  manifest.cols = built.matrix.cols;
  manifest.nonzero_cells = built.matrix.cells.size();
  manifest.dropped_rows = built.dropped_rows.size();
  manifest.density =
      built.matrix.rows * built.matrix.cols == 0
          ? 0.0
          : static_cast<double>(built.matrix.cells.size()) /
                (static_cast<double>(built.matrix.rows) * static_cast<double>(built.matrix.cols));

  LogEntropyResult weighted;
  run_stage("log_entropy", [&] { weighted = log_entropy_transform(built.matrix); });

  // Steps 9-10: truncated SVD and projection.
  SvdResult svd;
  run_stage("svd", [&] {
    if (weighted.matrix.rows == 0 || weighted.matrix.cols == 0) {
      throw std::runtime_error("matrix is empty (no pair co-occurs with any pattern)");
    }
    std::size_t k = std::min<std::size_t>(config.k,
                                          std::min(weighted.matrix.rows, weighted.matrix.cols));
    svd = truncated_svd(weighted.matrix, k);
  });
  manifest.k_eff = static_cast<std::size_t>(svd.k);
  run_stage("projection", [&] { result.space = project(svd, built.row_map); });

  return result;
}

ArtifactPaths ArtifactPaths::in_dir(const std::filesystem::path& dir) {
  return {dir / "space.bin", dir / "versions.json", dir / "patterns.tsv", dir / "manifest.json"};
}

std::string versions_to_json(const std::vector<PairVersions>& versions) {
  json out = json::array();
  for (const auto& pv : versions) {
    json alts = json::array();
    for (const auto& alt : pv.alternates) {
      alts.push_back({{"a", alt.pair.a},
                      {"b", alt.pair.b},
                      {"source", alt.source == AlternateSource::kReplacedA ? "a" : "b"},
                      {"rank", alt.rank},
                      {"frequency", alt.frequency}});
    }
    out.push_back({{"a", pv.original.a},
                   {"b", pv.original.b},
                   {"pos_a", std::string(to_string(pv.original.pos_a))},
                   {"pos_b", std::string(to_string(pv.original.pos_b))},
                   {"alternates", alts}});
  }
  return out.dump(2) + "\n";
}

std::vector<PairVersions> versions_from_json(std::string_view text) {
  json parsed = json::parse(text);
  std::vector<PairVersions> out;
  for (const auto& item : parsed) {
    PairVersions pv;
    pv.original = WordPair(item.at("a").get<std::string>(), item.at("b").get<std::string>(),
                           parse_pos(item.at("pos_a").get<std::string>()),
                           parse_pos(item.at("pos_b").get<std::string>()));
    for (const auto& alt : item.at("alternates")) {
      AlternatePair ap;
      ap.pair = WordPair(alt.at("a").get<std::string>(), alt.at("b").get<std::string>(),
                         pv.original.pos_a, pv.original.pos_b);
      ap.source = alt.at("source").get<std::string>() == "a" ? AlternateSource::kReplacedA
                                                             : AlternateSource::kReplacedB;
      ap.rank = alt.at("rank").get<std::uint32_t>();
      ap.frequency = alt.at("frequency").get<std::uint64_t>();
      pv.alternates.push_back(std::move(ap));
    }
    out.push_back(std::move(pv));
  }
  return out;
}

std::string pattern_table_to_tsv(const PatternTable& table) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < table.size(); ++i) {
    ss << table.patterns[i].render() << '\t' << table.support[i] << '\n';
  }
  return ss.str();
}

void save_artifacts(const PipelineResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ArtifactPaths paths = ArtifactPaths::in_dir(dir);
  result.space.save(paths.space);
  write_file(paths.versions, versions_to_json(result.pair_versions));
  write_file(paths.patterns, pattern_table_to_tsv(result.pattern_table));
  write_file(paths.manifest, result.manifest.to_json());
}

PipelineResult load_artifacts(const std::filesystem::path& dir) {
  ArtifactPaths paths = ArtifactPaths::in_dir(dir);
  PipelineResult result;
  result.manifest = RunManifest::from_json(read_file(paths.manifest));
  result.config = result.manifest.config;
  result.space = ProjectedSpace::load(paths.space);
  result.pair_versions = versions_from_json(read_file(paths.versions));
  return result;
}

std::optional<PipelineResult> load_cached_run(const std::filesystem::path& dir,
                                              const LraConfig& config,
                                              const std::string& corpus_digest,
                                              const std::string& thesaurus_digest,
                                              const std::string& pairs_digest) {
  ArtifactPaths paths = ArtifactPaths::in_dir(dir);
  std::error_code ec;
  if (!std::filesystem::exists(paths.manifest, ec)) return std::nullopt;
  try {
    RunManifest cached = RunManifest::from_json(read_file(paths.manifest));
    RunManifest wanted;
    wanted.config = config;
    wanted.corpus_digest = corpus_digest;
    wanted.thesaurus_digest = thesaurus_digest;
    wanted.pairs_digest = pairs_digest;
    if (!cached.same_inputs(wanted)) return std::nullopt;
    return load_artifacts(dir);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache is treated as a miss
  }
}

std::vector<WordPair> parse_pairs(std::string_view text, std::string_view source_name) {
  std::vector<WordPair> pairs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string stripped(line);
    while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' ')) {
      stripped.pop_back();
    }
    if (stripped.empty() || stripped.front() == '#') continue;
    std::istringstream ss(stripped);
    std::vector<std::string> fields;
    std::string f;
    while (ss >> f) fields.push_back(f);
    try {
      if (fields.size() == 2) {
        pairs.emplace_back(fields[0], fields[1]);
      } else if (fields.size() == 4) {
        pairs.emplace_back(fields[0], fields[1], parse_pos(fields[2]), parse_pos(fields[3]));
      } else {
        throw std::invalid_argument("expected 'word word' or 'word word pos pos'");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return pairs;
}

std::vector<WordPair> load_pairs(const std::filesystem::path& path) {
  return parse_pairs(read_file(path), path.string());
}

}  // namespace lra
