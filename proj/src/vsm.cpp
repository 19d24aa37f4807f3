// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/vsm.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "lra/similarity.hpp"
#include "lra/util.hpp"

namespace lra {

namespace {

std::vector<std::string> term_tokens(std::string_view term) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : term) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(lowercase_ascii(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(lowercase_ascii(cur));
  return out;
}

}  // namespace

JoiningTermList JoiningTermList::parse(std::string_view text, std::string_view source_name) {
  JoiningTermList list;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::string term = lowercase_ascii(line);
    if (!seen.insert(term).second) {
      throw std::runtime_error(std::string(source_name) + ":" + std::to_string(line_no) +
                               ": duplicate joining term: " + term);
    }
    list.terms.push_back(std::move(term));
  }
  if (list.terms.empty()) {
    throw std::runtime_error(std::string(source_name) + ": no joining terms");
  }
  return list;
}

JoiningTermList JoiningTermList::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::vector<double> vsm_vector(const WordPair& pair, const Corpus& corpus,
                               const JoiningTermList& terms) {
  std::vector<double> vec(2 * terms.terms.size(), 0.0);
  for (std::size_t i = 0; i < terms.terms.size(); ++i) {
    std::vector<std::string> middle = term_tokens(terms.terms[i]);

    std::vector<std::string> forward;
    forward.reserve(middle.size() + 2);
    forward.push_back(pair.a);
    forward.insert(forward.end(), middle.begin(), middle.end());
    forward.push_back(pair.b);

    std::vector<std::string> reverse;
    reverse.reserve(middle.size() + 2);
    reverse.push_back(pair.b);
    reverse.insert(reverse.end(), middle.begin(), middle.end());
    reverse.push_back(pair.a);

    vec[2 * i] = std::log(static_cast<double>(corpus.count_exact_phrase(forward)) + 1.0);
    vec[2 * i + 1] = std::log(static_cast<double>(corpus.count_exact_phrase(reverse)) + 1.0);
  }
  return vec;
}

double vsm_similarity(const WordPair& pair1, const WordPair& pair2, const Corpus& corpus,
                      const JoiningTermList& terms) {
  std::vector<double> v1 = vsm_vector(pair1, corpus, terms);
  std::vector<double> v2 = vsm_vector(pair2, corpus, terms);
  return cosine(v1, v2);
}

}  // namespace lra
