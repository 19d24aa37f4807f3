// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_EVALUATION_HPP_
#define LRA_EVALUATION_HPP_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lra/word_pair.hpp"

namespace lra {

/// A multiple-choice analogy question: a stem pair and five choice pairs.
struct AnalogyQuestion {
  WordPair stem;
  std::array<WordPair, 5> choices;
  int answer_index = 0;  // 0..4
};

/// Question file format: 7 non-blank lines per question (stem pair, five
/// choice pairs, answer letter a-e); each pair line is "word word" with an
/// optional pair of part-of-speech tags.
std::vector<AnalogyQuestion> load_analogy_questions(const std::filesystem::path& path);
std::vector<AnalogyQuestion> parse_analogy_questions(std::string_view text,
                                                     std::string_view source_name = "<memory>");

struct NounModifierInstance {
  std::string modifier;
  std::string head;
  std::string class30;
  std::string class5;

  WordPair pair() const { return WordPair(modifier, head); }
};

/// CSV: modifier,head,class30,class5 (header line optional). The class5
/// label of every class30 must be consistent across the file.
std::vector<NounModifierInstance> load_noun_modifiers(const std::filesystem::path& path);
std::vector<NounModifierInstance> parse_noun_modifiers(std::string_view text,
                                                       std::string_view source_name = "<memory>");

/// Pair similarity measure (LRA, VSM, or anything else under test).
using PairMeasure = std::function<double(const WordPair&, const WordPair&)>;

struct AnswerOutcome {
  bool skipped = false;
  int choice = -1;                      // valid when not skipped
  std::array<double, 5> similarities{}; // as evaluated
};

/// Picks the choice with the highest similarity to the stem; skips when all
/// five are zero. Ties go to the lowest index.
AnswerOutcome answer_question(const AnalogyQuestion& question, const PairMeasure& measure);

struct SatReport {
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t skipped = 0;
  std::size_t total = 0;
  double score = 0.0;  // (correct + 0.2 * skipped) / total
};

SatReport evaluate_sat(const std::vector<AnalogyQuestion>& questions, const PairMeasure& measure);

/// (correct + 0.2 * skipped) / total — skipped questions get the expected
/// value of a random guess over five choices.
double score_sat(std::size_t correct, std::size_t skipped, std::size_t total);

struct ClassMetrics {
  std::size_t true_positives = 0;
  std::size_t predicted = 0;  // tp + fp
  std::size_t actual = 0;     // tp + fn
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

struct ClassificationReport {
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
  std::map<std::string, ClassMetrics> per_class;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f = 0.0;
};

/// Per-class precision/recall/F and their unweighted (macro) means from
/// (actual, predicted) label pairs. 0/0 counts as 0 throughout.
ClassificationReport macro_f(
    const std::vector<std::pair<std::string, std::string>>& actual_predicted);

struct LoocvReport {
  ClassificationReport coarse;  // 5-class problem
  ClassificationReport fine;    // 30-class problem
  std::vector<int> neighbor;    // chosen neighbor per instance
};

/// Leave-one-out 1-nearest-neighbor classification: each instance takes the
/// label of its most similar other instance (ties to the lowest index).
/// `measure(i, j)` scores instances i and j.
LoocvReport loocv_nearest_neighbor(const std::vector<NounModifierInstance>& instances,
                                   const std::function<double(std::size_t, std::size_t)>& measure);

}  // namespace lra

#endif  // LRA_EVALUATION_HPP_
