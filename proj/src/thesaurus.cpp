// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/thesaurus.hpp"

#include <charconv>
#include <stdexcept>

#include "lra/util.hpp"

namespace lra {

namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line_no, std::string_view what) {
  throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                           ": " + std::string(what));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdj: return "adj";
    case PartOfSpeech::kAdv: return "adv";
  }
  return "noun";
}

PartOfSpeech parse_pos(std::string_view s) {
  if (s == "noun" || s == "n") return PartOfSpeech::kNoun;
  if (s == "verb" || s == "v") return PartOfSpeech::kVerb;
  if (s == "adj" || s == "a") return PartOfSpeech::kAdj;
  if (s == "adv" || s == "r") return PartOfSpeech::kAdv;
  throw std::invalid_argument("unknown part of speech: " + std::string(s));
}

Thesaurus Thesaurus::parse(std::string_view text, std::string_view source_name) {
  Thesaurus thesaurus;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3) fail(source_name, line_no, "expected 3 tab-separated fields");

    ThesaurusEntry entry;
    entry.headword = lowercase_ascii(trim(fields[0]));
    if (entry.headword.empty()) fail(source_name, line_no, "empty headword");
    try {
      entry.pos = parse_pos(trim(fields[1]));
    } catch (const std::invalid_argument& e) {
      fail(source_name, line_no, e.what());
    }

    std::string_view neighbors_field = trim(fields[2]);
    double prev_score = 1.0;
    if (!neighbors_field.empty()) {
      for (std::string_view item : split(neighbors_field, ',')) {
        item = trim(item);
        if (item.empty()) fail(source_name, line_no, "empty neighbor item");
        std::size_t colon = item.rfind(':');
        if (colon == std::string_view::npos) {
          fail(source_name, line_no, "neighbor missing ':score'");
        }
        ThesaurusNeighbor n;
        n.word = lowercase_ascii(trim(item.substr(0, colon)));
        if (n.word.empty()) fail(source_name, line_no, "empty neighbor word");
        std::string_view score_str = trim(item.substr(colon + 1));
        auto [ptr, ec] =
            std::from_chars(score_str.data(), score_str.data() + score_str.size(), n.score);
        if (ec != std::errc() || ptr != score_str.data() + score_str.size()) {
          fail(source_name, line_no, "bad score: " + std::string(score_str));
        }
        if (n.score <= 0.0 || n.score > 1.0) {
          fail(source_name, line_no, "score out of (0,1]: " + std::string(score_str));
        }
        if (n.score > prev_score) {
          fail(source_name, line_no, "neighbor scores not sorted non-increasing");
        }
        if (n.word == entry.headword) {
          fail(source_name, line_no, "headword listed among its own neighbors");
        }
        prev_score = n.score;
        entry.neighbors.push_back(std::move(n));
      }
    }

    std::string key = entry.headword + "\t" + std::string(to_string(entry.pos));
    auto [it, inserted] = thesaurus.index_.emplace(std::move(key), thesaurus.entries_.size());
    if (!inserted) {
      fail(source_name, line_no,
           "duplicate entry for (" + entry.headword + ", " +
               std::string(to_string(entry.pos)) + ")");
    }
    thesaurus.entries_.push_back(std::move(entry));
  }
  return thesaurus;
}

Thesaurus Thesaurus::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

const ThesaurusEntry* Thesaurus::find(std::string_view word, PartOfSpeech pos) const {
  std::string key = lowercase_ascii(word) + "\t" + std::string(to_string(pos));
  auto it = index_.find(key);
  if (it == index_.end()) return nullptr;
  return &entries_[it->second];
}

std::vector<std::string> Thesaurus::top_similar(std::string_view word, PartOfSpeech pos,
                                                std::size_t n) const {
  if (n < 1) throw std::invalid_argument("top_similar: n must be >= 1");
  std::vector<std::string> out;
  const ThesaurusEntry* entry = find(word, pos);
  if (entry == nullptr) return out;
  std::size_t take = std::min(n, entry->neighbors.size());
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(entry->neighbors[i].word);
  return out;
}

}  // namespace lra
