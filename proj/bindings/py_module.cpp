// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lra/evaluation.hpp"
#include "lra/pipeline.hpp"
#include "lra/stemmer.hpp"
#include "lra/vsm.hpp"

namespace py = pybind11;
using namespace lra;

namespace {

std::vector<WordPair> to_pairs(const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<WordPair> pairs;
  pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) pairs.emplace_back(a, b);
  return pairs;
}

py::dict similarity_dict(const SimilarityResult& r) {
  py::dict d;
  d["similarity"] = r.value;
  d["original_cosine"] = r.original_cosine;
  d["n_qualifying"] = r.cosines_considered;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Latent relational analysis core (C++)";

  m.def("stem", &porter_stem, py::arg("word"), "Porter stem of a lowercased word");

  m.def(
      "tokenize",
      [](const std::string& text) {
        TokenizedText tt = tokenize(text);
        return tt.documents;
      },
      py::arg("text"),
      "Lowercased tokens grouped into sentence-delimited documents");

  m.def(
      "cosine",
      [](const std::vector<double>& u, const std::vector<double>& v) {
        return cosine(std::span<const double>(u), std::span<const double>(v));
      },
      py::arg("u"), py::arg("v"));

  m.def("score_sat", &score_sat, py::arg("correct"), py::arg("skipped"), py::arg("total"));

  m.def(
      "truncated_svd",
      [](const Eigen::MatrixXd& dense, std::size_t k) {
        SvdResult r = truncated_svd_dense(dense, k);
        return py::make_tuple(r.U, r.singular_values, r.V);
      },
      py::arg("matrix"), py::arg("k"),
      "Top-k singular triplets (U, s, V) with deterministic signs");

  py::class_<Corpus>(m, "Corpus")
      .def_static("build",
                  [](const std::vector<std::filesystem::path>& files) {
                    return Corpus::build(files);
                  },
                  py::arg("files"))
      .def_static("build_from_text", &Corpus::build_from_text, py::arg("text"))
      .def_static("load", &Corpus::load, py::arg("path"))
      .def("save", &Corpus::save, py::arg("path"))
      .def("find_phrases",
           [](const Corpus& c, const std::string& left, const std::string& right,
              std::uint32_t min_inter, std::uint32_t max_inter) {
             std::vector<py::tuple> out;
             for (const auto& match :
                  c.find_phrases(PhraseQuery(left, right, min_inter, max_inter))) {
               out.push_back(py::make_tuple(match.doc_id, match.start_pos, match.intervening));
             }
             return out;
           },
           py::arg("left_stem"), py::arg("right_stem"), py::arg("min_inter"),
           py::arg("max_inter"))
      .def("phrase_frequency", &Corpus::phrase_frequency, py::arg("a"), py::arg("b"),
           py::arg("max_len"))
      .def("count_exact_phrase", &Corpus::count_exact_phrase, py::arg("tokens"))
      .def_property_readonly("token_count", &Corpus::token_count)
      .def_property_readonly("document_count", &Corpus::document_count);

  py::class_<Thesaurus>(m, "Thesaurus")
      .def_static("load", &Thesaurus::load, py::arg("path"))
      .def_static("parse", [](const std::string& text) { return Thesaurus::parse(text); },
                  py::arg("text"))
      .def("top_similar",
           [](const Thesaurus& t, const std::string& word, const std::string& pos,
              std::size_t n) { return t.top_similar(word, parse_pos(pos), n); },
           py::arg("word"), py::arg("pos"), py::arg("n"))
      .def_property_readonly("size", &Thesaurus::size);

  py::class_<LraConfig>(m, "LraConfig")
      .def(py::init<>())
      .def_readwrite("num_sim", &LraConfig::num_sim)
      .def_readwrite("max_phrase", &LraConfig::max_phrase)
      .def_readwrite("num_filter", &LraConfig::num_filter)
      .def_readwrite("min_inter", &LraConfig::min_inter)
      .def_readwrite("max_inter", &LraConfig::max_inter)
      .def_readwrite("num_patterns", &LraConfig::num_patterns)
      .def_readwrite("k", &LraConfig::k)
      .def("validate", &LraConfig::validate)
      .def_static("load", &LraConfig::load, py::arg("path"));

  py::class_<PipelineResult>(m, "PipelineResult")
      .def("similarity",
           [](const PipelineResult& r, const std::string& a, const std::string& b,
              const std::string& c, const std::string& d) {
             return similarity_dict(r.similarity(WordPair(a, b), WordPair(c, d)));
           },
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def("manifest_json", [](const PipelineResult& r) { return r.manifest.to_json(); })
      .def("save", [](const PipelineResult& r, const std::filesystem::path& dir) {
        save_artifacts(r, dir);
      })
      .def_static("load", &load_artifacts, py::arg("dir"));

  m.def(
      "run_pipeline",
      [](const Corpus& corpus, const Thesaurus& thesaurus,
         const std::vector<std::pair<std::string, std::string>>& pairs,
         const LraConfig& config) {
        return run_pipeline(config, corpus, thesaurus, to_pairs(pairs));
      },
      py::arg("corpus"), py::arg("thesaurus"), py::arg("pairs"),
      py::arg("config") = LraConfig{},
      "Run pipeline steps 1-10 over the input pairs");

  m.def(
      "vsm_vector",
      [](const std::string& a, const std::string& b, const Corpus& corpus,
         const std::vector<std::string>& terms) {
        JoiningTermList list{terms};
        return vsm_vector(WordPair(a, b), corpus, list);
      },
      py::arg("a"), py::arg("b"), py::arg("corpus"), py::arg("terms"));

  m.def(
      "vsm_similarity",
      [](const std::string& a, const std::string& b, const std::string& c,
         const std::string& d, const Corpus& corpus, const std::vector<std::string>& terms) {
        JoiningTermList list{terms};
        return vsm_similarity(WordPair(a, b), WordPair(c, d), corpus, list);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("corpus"),
      py::arg("terms"));
}
