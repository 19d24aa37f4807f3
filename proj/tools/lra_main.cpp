// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.
//
// Command line interface. All reports are JSON on stdout; human-oriented
// tables and progress go to stderr. Exit codes: 0 success, 1 runtime
// failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>

#include "json.hpp"
#include "lra/evaluation.hpp"
#include "lra/pipeline.hpp"
#include "lra/util.hpp"
#include "lra/vsm.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace lra;

namespace {

struct GlobalOptions {
  std::string config_file;
  std::string out_dir;
  std::uint64_t seed = 0;  // reserved; the pipeline is deterministic
};

LraConfig effective_config(const GlobalOptions& opts) {
  if (opts.config_file.empty()) return LraConfig{};
  return LraConfig::load(opts.config_file);
}

std::vector<fs::path> corpus_files_in(const fs::path& dir) {
  if (!fs::exists(dir)) throw std::runtime_error("no such directory: " + dir.string());
  if (fs::is_regular_file(dir)) return {dir};
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("corpus build error: empty corpus");
  return files;
}

json sat_report_json(const SatReport& r, std::string_view measure) {
  return json{{"task", "sat"},       {"measure", measure},   {"correct", r.correct},
              {"incorrect", r.incorrect}, {"skipped", r.skipped}, {"total", r.total},
              {"score", r.score}};
}

json class_report_json(const ClassificationReport& r) {
  json per_class = json::object();
  for (const auto& [label, m] : r.per_class) {
    per_class[label] = {{"precision", m.precision}, {"recall", m.recall}, {"f", m.f},
                        {"true_positives", m.true_positives}, {"predicted", m.predicted},
                        {"actual", m.actual}};
  }
  return json{{"correct", r.correct},
              {"incorrect", r.incorrect},
              {"total", r.total},
              {"accuracy", r.accuracy},
              {"macro_precision", r.macro_precision},
              {"macro_recall", r.macro_recall},
              {"macro_f", r.macro_f},
              {"per_class", per_class}};
}

void print_sat_table(const SatReport& r, std::string_view measure) {
  auto pct = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * v);
    return std::string(buf);
  };
  std::cerr << "            " << measure << "\n"
            << "Correct     " << r.correct << "\n"
            << "Incorrect   " << r.incorrect << "\n"
            << "Skipped     " << r.skipped << "\n"
            << "Total       " << r.total << "\n"
            << "Score       " << pct(r.score) << "\n";
}

void print_nm_table(const LoocvReport& r, std::string_view measure) {
  auto pct = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.1f%%", 100.0 * v);
    return std::string(buf);
  };
  auto row = [&](const char* label, auto fine, auto coarse) {
    std::cerr << label << "\t" << fine << "\t" << coarse << "\n";
  };
  std::cerr << "measure: " << measure << "\n";
  std::cerr << "\t30-class\t5-class\n";
  row("Correct", r.fine.correct, r.coarse.correct);
  row("Incorrect", r.fine.incorrect, r.coarse.incorrect);
  row("Total", r.fine.total, r.coarse.total);
  row("Accuracy", pct(r.fine.accuracy), pct(r.coarse.accuracy));
  row("Precision", pct(r.fine.macro_precision), pct(r.coarse.macro_precision));
  row("Recall", pct(r.fine.macro_recall), pct(r.coarse.macro_recall));
  row("F", pct(r.fine.macro_f), pct(r.coarse.macro_f));
}

/// Runs (or loads from cache) the LRA pipeline over the given pairs.
PipelineResult pipeline_for(const GlobalOptions& opts, const std::string& index_file,
                            const std::string& thesaurus_file,
                            const std::vector<WordPair>& pairs, const Corpus& corpus,
                            const Thesaurus& thesaurus) {
  LraConfig config = effective_config(opts);
  std::string corpus_digest = file_digest(index_file);
  std::string thesaurus_digest = file_digest(thesaurus_file);

  if (!opts.out_dir.empty()) {
    std::string pairs_digest;
    {
      std::set<WordPair> seen;
      std::string digest_src;
      for (const auto& p : pairs) {
        if (seen.insert(p).second) {
          digest_src += p.key();
          digest_src += '\n';
        }
      }
      pairs_digest = content_digest(digest_src);
    }
    if (auto cached = load_cached_run(opts.out_dir, config, corpus_digest, thesaurus_digest,
                                      pairs_digest)) {
      std::cerr << "lra: reusing cached run in " << opts.out_dir << "\n";
      return std::move(*cached);
    }
  }

  PipelineResult result =
      run_pipeline(config, corpus, thesaurus, pairs, corpus_digest, thesaurus_digest);
  for (const auto& s : result.manifest.stages) {
    std::cerr << "lra: stage " << s.name << " " << s.ms << " ms\n";
  }
  if (!opts.out_dir.empty()) {
    save_artifacts(result, opts.out_dir);
    std::cerr << "lra: artifacts written to " << opts.out_dir << "\n";
  }
  return result;
}

std::vector<WordPair> question_pairs(const std::vector<AnalogyQuestion>& questions) {
  std::vector<WordPair> pairs;
  for (const auto& q : questions) {
    pairs.push_back(q.stem);
    for (const auto& c : q.choices) pairs.push_back(c);
  }
  return pairs;
}

int cmd_index_build(const std::string& dir, const std::string& out_file) {
  Corpus corpus = Corpus::build(corpus_files_in(dir));
  corpus.save(out_file);
  json report{{"tokens", corpus.token_count()},
              {"documents", corpus.document_count()},
              {"vocabulary", corpus.vocabulary().size()},
              {"output", out_file},
              {"digest", file_digest(out_file)}};
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_thesaurus_check(const std::string& file) {
  Thesaurus thesaurus = Thesaurus::load(file);
  json report{{"ok", true}, {"entries", thesaurus.size()}};
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_run(const GlobalOptions& opts, const std::string& index_file,
            const std::string& thesaurus_file, const std::string& pairs_file) {
  Corpus corpus = Corpus::load(index_file);
  Thesaurus thesaurus = Thesaurus::load(thesaurus_file);
  std::vector<WordPair> pairs = load_pairs(pairs_file);
  GlobalOptions run_opts = opts;
  if (run_opts.out_dir.empty()) run_opts.out_dir = "lra-out";
  PipelineResult result =
      pipeline_for(run_opts, index_file, thesaurus_file, pairs, corpus, thesaurus);
  std::cout << result.manifest.to_json();
  return 0;
}

int cmd_sim(const std::string& comparisons_file, const std::string& run_dir) {
  PipelineResult result = load_artifacts(run_dir);
  const std::string file_text = read_file(comparisons_file);
  std::string_view text = file_text;

  json out = json::array();
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
    std::string a, b, c, d;
    if (!(ss >> a >> b >> c >> d)) {
      throw std::runtime_error(comparisons_file + ":" + std::to_string(line_no) +
                               ": expected four words: a b c d");
    }
    WordPair p1(a, b), p2(c, d);
    SimilarityResult sim = result.similarity(p1, p2);
    out.push_back({{"pair1", p1.key()},
                   {"pair2", p2.key()},
                   {"similarity", sim.value},
                   {"original_cosine", sim.original_cosine},
                   {"n_qualifying", sim.cosines_considered}});
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_eval_sat(const GlobalOptions& opts, const std::string& questions_file,
                 const std::string& index_file, const std::string& thesaurus_file,
                 const std::string& measure, const std::string& terms_file) {
  auto questions = load_analogy_questions(questions_file);
  Corpus corpus = Corpus::load(index_file);

  SatReport report;
  if (measure == "lra") {
    Thesaurus thesaurus = Thesaurus::load(thesaurus_file);
    PipelineResult result = pipeline_for(opts, index_file, thesaurus_file,
                                         question_pairs(questions), corpus, thesaurus);
    report = evaluate_sat(questions, [&](const WordPair& s, const WordPair& c) {
      return result.similarity(s, c).value;
    });
  } else {
    JoiningTermList terms = JoiningTermList::load(terms_file);
    report = evaluate_sat(questions, [&](const WordPair& s, const WordPair& c) {
      return vsm_similarity(s, c, corpus, terms);
    });
  }
  print_sat_table(report, measure);
  std::cout << sat_report_json(report, measure).dump(2) << "\n";
  return 0;
}

int cmd_eval_nm(const GlobalOptions& opts, const std::string& csv_file,
                const std::string& index_file, const std::string& thesaurus_file,
                const std::string& measure, const std::string& terms_file) {
  auto instances = load_noun_modifiers(csv_file);
  Corpus corpus = Corpus::load(index_file);

  LoocvReport report;
  if (measure == "lra") {
    Thesaurus thesaurus = Thesaurus::load(thesaurus_file);
    std::vector<WordPair> pairs;
    pairs.reserve(instances.size());
    for (const auto& inst : instances) pairs.push_back(inst.pair());
    PipelineResult result =
        pipeline_for(opts, index_file, thesaurus_file, pairs, corpus, thesaurus);
    report = loocv_nearest_neighbor(instances, [&](std::size_t i, std::size_t j) {
      return result.similarity(instances[i].pair(), instances[j].pair()).value;
    });
  } else {
    JoiningTermList terms = JoiningTermList::load(terms_file);
    std::vector<std::vector<double>> vectors;
    vectors.reserve(instances.size());
    for (const auto& inst : instances) {
      vectors.push_back(vsm_vector(inst.pair(), corpus, terms));
    }
    report = loocv_nearest_neighbor(instances, [&](std::size_t i, std::size_t j) {
      return cosine(vectors[i], vectors[j]);
    });
  }
  print_nm_table(report, measure);
  json out{{"task", "noun_modifier"},
           {"measure", measure},
           {"fine", class_report_json(report.fine)},
           {"coarse", class_report_json(report.coarse)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_patterns_dump(const GlobalOptions& opts, const std::string& index_file,
                      const std::string& thesaurus_file, const std::string& pairs_file) {
  LraConfig config = effective_config(opts);
  Corpus corpus = Corpus::load(index_file);
  Thesaurus thesaurus = Thesaurus::load(thesaurus_file);
  std::vector<WordPair> pairs = load_pairs(pairs_file);

  std::vector<PairVersions> versions;
  std::set<WordPair> seen;
  for (const auto& p : pairs) {
    if (!seen.insert(p).second) continue;
    versions.push_back(filter_alternates(p, generate_alternates(p, thesaurus, config.num_sim),
                                         corpus, config.num_filter, config.max_phrase));
  }
  PhraseTable phrases = harvest_phrases(versions, corpus, config.min_inter, config.max_inter);
  PatternTable table = mine_top_patterns(phrases, config.num_patterns, config.max_inter);
  std::cout << pattern_table_to_tsv(table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latent relational analysis: relational similarity from corpus patterns"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_file, "pipeline parameters, flat key=value file");
  app.add_option("--out", opts.out_dir, "directory for persisted artifacts");
  app.add_option("--seed", opts.seed, "reserved; the pipeline is deterministic");

  // lra index build <dir> -o <file>
  auto* index = app.add_subcommand("index", "corpus index operations");
  auto* index_build = index->add_subcommand("build", "tokenize and index a corpus directory");
  std::string corpus_dir, index_out;
  index_build->add_option("dir", corpus_dir, "directory of plain-text files")->required();
  index_build->add_option("-o,--output", index_out, "index file to write")->required();

  // lra thesaurus check <file>
  auto* thesaurus_cmd = app.add_subcommand("thesaurus", "thesaurus operations");
  auto* thesaurus_check = thesaurus_cmd->add_subcommand("check", "validate a thesaurus file");
  std::string thesaurus_file_check;
  thesaurus_check->add_option("file", thesaurus_file_check, "thesaurus file")->required();

  std::string index_file, thesaurus_file, pairs_file, terms_file, measure;

  // lra run --index <f> --thesaurus <f> --pairs <f>
  auto* run_cmd = app.add_subcommand("run", "run the full pipeline and persist artifacts");
  run_cmd->add_option("--index", index_file, "corpus index file")->required();
  run_cmd->add_option("--thesaurus", thesaurus_file, "thesaurus file")->required();
  run_cmd->add_option("--pairs", pairs_file, "input pairs, one 'word word' per line")->required();

  // lra sim <comparisons-file> --run <dir>
  auto* sim_cmd = app.add_subcommand("sim", "relational similarity for pair comparisons");
  std::string comparisons_file, run_dir;
  sim_cmd->add_option("comparisons", comparisons_file, "file of 'a b c d' lines")->required();
  sim_cmd->add_option("--run", run_dir, "artifact directory from 'lra run'")->required();

  // lra eval sat|nm ...
  auto* eval_cmd = app.add_subcommand("eval", "evaluation harnesses");
  auto* eval_sat = eval_cmd->add_subcommand("sat", "multiple-choice analogy questions");
  std::string questions_file, nm_file;
  eval_sat->add_option("questions", questions_file, "question file (7 lines per question)")
      ->required();
  eval_sat->add_option("--index", index_file, "corpus index file")->required();
  eval_sat->add_option("--thesaurus", thesaurus_file, "thesaurus file (lra measure)");
  eval_sat->add_option("--measure", measure, "lra or vsm")
      ->default_val("lra")
      ->check(CLI::IsMember({"lra", "vsm"}));
  eval_sat->add_option("--terms", terms_file, "joining terms file (vsm measure)");

  auto* eval_nm = eval_cmd->add_subcommand("nm", "noun-modifier classification (LOOCV 1-NN)");
  eval_nm->add_option("instances", nm_file, "CSV: modifier,head,class30,class5")->required();
  eval_nm->add_option("--index", index_file, "corpus index file")->required();
  eval_nm->add_option("--thesaurus", thesaurus_file, "thesaurus file (lra measure)");
  eval_nm->add_option("--measure", measure, "lra or vsm")
      ->default_val("lra")
      ->check(CLI::IsMember({"lra", "vsm"}));
  eval_nm->add_option("--terms", terms_file, "joining terms file (vsm measure)");

  // lra vsm eval sat|nm — forced-VSM aliases
  auto* vsm_cmd = app.add_subcommand("vsm", "vector space baseline");
  auto* vsm_eval = vsm_cmd->add_subcommand("eval", "evaluate the VSM baseline");
  auto* vsm_eval_sat = vsm_eval->add_subcommand("sat", "analogy questions with VSM");
  vsm_eval_sat->add_option("questions", questions_file, "question file")->required();
  vsm_eval_sat->add_option("--index", index_file, "corpus index file")->required();
  vsm_eval_sat->add_option("--terms", terms_file, "joining terms file")->required();
  auto* vsm_eval_nm = vsm_eval->add_subcommand("nm", "noun-modifier classification with VSM");
  vsm_eval_nm->add_option("instances", nm_file, "CSV: modifier,head,class30,class5")->required();
  vsm_eval_nm->add_option("--index", index_file, "corpus index file")->required();
  vsm_eval_nm->add_option("--terms", terms_file, "joining terms file")->required();

  // lra patterns dump ...
  auto* patterns_cmd = app.add_subcommand("patterns", "pattern table operations");
  auto* patterns_dump = patterns_cmd->add_subcommand("dump", "mine and dump patterns as TSV");
  patterns_dump->add_option("--index", index_file, "corpus index file")->required();
  patterns_dump->add_option("--thesaurus", thesaurus_file, "thesaurus file")->required();
  patterns_dump->add_option("--pairs", pairs_file, "input pairs file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lra: " << e.what() << "\n";
    return 2;
  }

  try {
    if (index_build->parsed()) return cmd_index_build(corpus_dir, index_out);
    if (thesaurus_check->parsed()) return cmd_thesaurus_check(thesaurus_file_check);
    if (run_cmd->parsed()) return cmd_run(opts, index_file, thesaurus_file, pairs_file);
    if (sim_cmd->parsed()) return cmd_sim(comparisons_file, run_dir);
    if (eval_sat->parsed()) {
      if (measure == "lra" && thesaurus_file.empty()) {
        std::cerr << "lra: --thesaurus is required with --measure lra\n";
        return 2;
      }
      if (measure == "vsm" && terms_file.empty()) {
        std::cerr << "lra: --terms is required with --measure vsm\n";
        return 2;
      }
      return cmd_eval_sat(opts, questions_file, index_file, thesaurus_file, measure, terms_file);
    }
    if (eval_nm->parsed()) {
      if (measure == "lra" && thesaurus_file.empty()) {
        std::cerr << "lra: --thesaurus is required with --measure lra\n";
        return 2;
      }
      if (measure == "vsm" && terms_file.empty()) {
        std::cerr << "lra: --terms is required with --measure vsm\n";
        return 2;
      }
      return cmd_eval_nm(opts, nm_file, index_file, thesaurus_file, measure, terms_file);
    }
    if (vsm_eval_sat->parsed()) {
      return cmd_eval_sat(opts, questions_file, index_file, "", "vsm", terms_file);
    }
    if (vsm_eval_nm->parsed()) {
      return cmd_eval_nm(opts, nm_file, index_file, "", "vsm", terms_file);
    }
    if (patterns_dump->parsed()) {
      return cmd_patterns_dump(opts, index_file, thesaurus_file, pairs_file);
    }
    std::cerr << "lra: no subcommand given (try --help)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lra: error: " << e.what() << "\n";
    return 1;
  }
}
