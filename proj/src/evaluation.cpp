// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/evaluation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lra/util.hpp"

namespace lra {

namespace {

std::vector<std::string> whitespace_split(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

WordPair parse_pair_line(const std::vector<std::string>& fields, std::string_view source,
                         std::size_t line_no) {
  if (fields.size() == 2) return WordPair(fields[0], fields[1]);
  if (fields.size() == 4) {
    return WordPair(fields[0], fields[1], parse_pos(fields[2]), parse_pos(fields[3]));
  }
  throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                           ": expected 'word word' or 'word word pos pos'");
}

}  // namespace

std::vector<AnalogyQuestion> parse_analogy_questions(std::string_view text,
                                                     std::string_view source_name) {
  // Collect non-blank lines with their numbers, then consume 7 at a time.
  std::vector<std::pair<std::size_t, std::string>> lines;
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
    lines.emplace_back(line_no, stripped);
  }
  if (lines.size() % 7 != 0) {
    throw std::runtime_error(std::string(source_name) +
                             ": question count mismatch (7 lines per question, got " +
                             std::to_string(lines.size()) + " non-blank lines)");
  }

  std::vector<AnalogyQuestion> questions;
  for (std::size_t q = 0; q < lines.size(); q += 7) {
    AnalogyQuestion question;
    question.stem =
        parse_pair_line(whitespace_split(lines[q].second), source_name, lines[q].first);
    for (std::size_t i = 0; i < 5; ++i) {
      question.choices[i] = parse_pair_line(whitespace_split(lines[q + 1 + i].second),
                                            source_name, lines[q + 1 + i].first);
    }
    const std::string& answer = lines[q + 6].second;
    if (answer.size() != 1 || answer[0] < 'a' || answer[0] > 'e') {
      throw std::runtime_error(std::string(source_name) + ":" +
                               std::to_string(lines[q + 6].first) +
                               ": answer must be a letter a-e, got '" + answer + "'");
    }
    question.answer_index = answer[0] - 'a';
    questions.push_back(std::move(question));
  }
  return questions;
}

std::vector<AnalogyQuestion> load_analogy_questions(const std::filesystem::path& path) {
  return parse_analogy_questions(read_file(path), path.string());
}

std::vector<NounModifierInstance> parse_noun_modifiers(std::string_view text,
                                                       std::string_view source_name) {
  std::vector<NounModifierInstance> instances;
  std::map<std::string, std::string> group_of;  // class30 -> class5 consistency
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
    if (line_no == 1 && stripped.rfind("modifier,", 0) == 0) continue;  // header

    std::vector<std::string> fields;
    std::stringstream ss(stripped);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": expected modifier,head,class30,class5");
    }
    NounModifierInstance inst;
    inst.modifier = lowercase_ascii(fields[0]);
    inst.head = lowercase_ascii(fields[1]);
    inst.class30 = lowercase_ascii(fields[2]);
    inst.class5 = lowercase_ascii(fields[3]);
    auto [it, inserted] = group_of.emplace(inst.class30, inst.class5);
    if (!inserted && it->second != inst.class5) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": class30 '" + inst.class30 +
                               "' mapped to two different class5 groups");
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

std::vector<NounModifierInstance> load_noun_modifiers(const std::filesystem::path& path) {
  return parse_noun_modifiers(read_file(path), path.string());
}

AnswerOutcome answer_question(const AnalogyQuestion& question, const PairMeasure& measure) {
  AnswerOutcome outcome;
  bool all_zero = true;
  for (std::size_t i = 0; i < 5; ++i) {
    outcome.similarities[i] = measure(question.stem, question.choices[i]);
    if (outcome.similarities[i] != 0.0) all_zero = false;
  }
  if (all_zero) {
    outcome.skipped = true;
    return outcome;
  }
  int best = 0;
  for (int i = 1; i < 5; ++i) {
    if (outcome.similarities[i] > outcome.similarities[best]) best = i;
  }
  outcome.choice = best;
  return outcome;
}

double score_sat(std::size_t correct, std::size_t skipped, std::size_t total) {
  if (total == 0) throw std::invalid_argument("score_sat: total must be positive");
  return (static_cast<double>(correct) + 0.2 * static_cast<double>(skipped)) /
         static_cast<double>(total);
}

SatReport evaluate_sat(const std::vector<AnalogyQuestion>& questions, const PairMeasure& measure) {
  SatReport report;
  report.total = questions.size();
  for (const auto& q : questions) {
    AnswerOutcome outcome = answer_question(q, measure);
    if (outcome.skipped) {
      ++report.skipped;
    } else if (outcome.choice == q.answer_index) {
      ++report.correct;
    } else {
      ++report.incorrect;
    }
  }
  report.score = score_sat(report.correct, report.skipped, report.total);
  return report;
}

ClassificationReport macro_f(
    const std::vector<std::pair<std::string, std::string>>& actual_predicted) {
  ClassificationReport report;
  report.total = actual_predicted.size();
  for (const auto& [actual, predicted] : actual_predicted) {
    auto& a = report.per_class[actual];
    auto& p = report.per_class[predicted];
    a.actual += 1;
    p.predicted += 1;
    if (actual == predicted) {
      a.true_positives += 1;
      ++report.correct;
    } else {
      ++report.incorrect;
    }
  }
  report.accuracy =
      report.total == 0 ? 0.0 : static_cast<double>(report.correct) / report.total;

  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (auto& [label, m] : report.per_class) {
    m.precision = m.predicted == 0 ? 0.0 : static_cast<double>(m.true_positives) / m.predicted;
    m.recall = m.actual == 0 ? 0.0 : static_cast<double>(m.true_positives) / m.actual;
    m.f = (m.precision + m.recall) == 0.0
              ? 0.0
              : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    sum_p += m.precision;
    sum_r += m.recall;
    sum_f += m.f;
  }
  std::size_t n_classes = report.per_class.size();
  if (n_classes > 0) {
    report.macro_precision = sum_p / static_cast<double>(n_classes);
    report.macro_recall = sum_r / static_cast<double>(n_classes);
    report.macro_f = sum_f / static_cast<double>(n_classes);
  }
  return report;
}

LoocvReport loocv_nearest_neighbor(
    const std::vector<NounModifierInstance>& instances,
    const std::function<double(std::size_t, std::size_t)>& measure) {
  if (instances.size() < 2) {
    throw std::invalid_argument("loocv_nearest_neighbor: need at least 2 instances");
  }
  LoocvReport report;
  report.neighbor.resize(instances.size(), -1);
  std::vector<std::pair<std::string, std::string>> fine, coarse;
  fine.reserve(instances.size());
  coarse.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::size_t best = SIZE_MAX;
    double best_sim = 0.0;
    for (std::size_t j = 0; j < instances.size(); ++j) {
      if (j == i) continue;  // an instance may never be its own neighbor
      double sim = measure(i, j);
      if (best == SIZE_MAX || sim > best_sim) {
        best = j;
        best_sim = sim;
      }
    }
    report.neighbor[i] = static_cast<int>(best);
    fine.emplace_back(instances[i].class30, instances[best].class30);
    coarse.emplace_back(instances[i].class5, instances[best].class5);
  }
  report.fine = macro_f(fine);
  report.coarse = macro_f(coarse);
  return report;
}

}  // namespace lra
