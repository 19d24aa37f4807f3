// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "lra/stemmer.hpp"
#include "lra/util.hpp"

namespace lra {

namespace {

constexpr std::string_view kIndexMagic = "LRAIDX1";

bool is_token_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c >= 0x80;
}

bool is_sentence_end(unsigned char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  std::vector<std::string> doc;
  std::string tok;
  auto flush_token = [&] {
    if (!tok.empty()) {
      doc.push_back(lowercase_ascii(tok));
      tok.clear();
    }
  };
  auto flush_doc = [&] {
    flush_token();
    if (!doc.empty()) {
      out.documents.push_back(std::move(doc));
      doc.clear();
    }
  };
  for (unsigned char c : text) {
    if (is_token_byte(c)) {
      tok.push_back(static_cast<char>(c));
    } else if (is_sentence_end(c)) {
      flush_doc();
    } else {
      flush_token();
    }
  }
  flush_doc();
  return out;
}

PhraseQuery::PhraseQuery(std::string left_stem, std::string right_stem, std::uint32_t min_i,
                         std::uint32_t max_i)
    : left(std::move(left_stem)), right(std::move(right_stem)), min_inter(min_i), max_inter(max_i) {
  if (left.empty() || right.empty()) {
    throw std::invalid_argument("PhraseQuery: empty stem");
  }
  if (max_inter < min_inter) {
    throw std::invalid_argument("PhraseQuery: max_inter < min_inter");
  }
}

Corpus Corpus::build(const std::vector<std::filesystem::path>& files) {
  Corpus corpus;
  for (const auto& file : files) {
    std::string text;
    try {
      text = read_file(file);
    } catch (const std::exception&) {
      throw std::runtime_error("corpus build error: unreadable file: " + file.string());
    }
    TokenizedText tt = tokenize(text);
    for (auto& doc_tokens : tt.documents) {
      std::vector<std::uint32_t> doc;
      doc.reserve(doc_tokens.size());
      for (auto& t : doc_tokens) {
        auto [it, inserted] =
            corpus.vocab_index_.try_emplace(t, static_cast<std::uint32_t>(corpus.vocab_.size()));
        if (inserted) corpus.vocab_.push_back(t);
        doc.push_back(it->second);
      }
      corpus.token_count_ += doc.size();
      corpus.documents_.push_back(std::move(doc));
    }
  }
  if (corpus.token_count_ == 0) {
    throw std::runtime_error("corpus build error: empty corpus");
  }
  corpus.index_documents();
  return corpus;
}

Corpus Corpus::build_from_text(std::string_view text) {
  Corpus corpus;
  TokenizedText tt = tokenize(text);
  for (auto& doc_tokens : tt.documents) {
    std::vector<std::uint32_t> doc;
    doc.reserve(doc_tokens.size());
    for (auto& t : doc_tokens) {
      auto [it, inserted] =
          corpus.vocab_index_.try_emplace(t, static_cast<std::uint32_t>(corpus.vocab_.size()));
      if (inserted) corpus.vocab_.push_back(t);
      doc.push_back(it->second);
    }
    corpus.token_count_ += doc.size();
    corpus.documents_.push_back(std::move(doc));
  }
  if (corpus.token_count_ == 0) {
    throw std::runtime_error("corpus build error: empty corpus");
  }
  corpus.index_documents();
  return corpus;
}

void Corpus::index_documents() {
  token_stem_.resize(vocab_.size());
  for (std::size_t t = 0; t < vocab_.size(); ++t) {
    std::string stem = porter_stem(vocab_[t]);
    auto [it, inserted] = stem_index_.try_emplace(stem, static_cast<std::uint32_t>(stems_.size()));
    if (inserted) stems_.push_back(std::move(stem));
    token_stem_[t] = it->second;
  }
  stem_postings_.assign(stems_.size(), {});
  token_postings_.assign(vocab_.size(), {});
  for (std::uint32_t d = 0; d < documents_.size(); ++d) {
    const auto& doc = documents_[d];
    for (std::uint32_t p = 0; p < doc.size(); ++p) {
      token_postings_[doc[p]].push_back({d, p});
      stem_postings_[token_stem_[doc[p]]].push_back({d, p});
    }
  }
}

std::vector<PhraseMatch> Corpus::find_phrases(const PhraseQuery& query) const {
  std::vector<PhraseMatch> matches;
  auto left_it = stem_index_.find(query.left);
  auto right_it = stem_index_.find(query.right);
  if (left_it == stem_index_.end() || right_it == stem_index_.end()) return matches;
  std::uint32_t right_stem = right_it->second;
  for (const Posting& post : stem_postings_[left_it->second]) {
    const auto& doc = documents_[post.doc];
    for (std::uint32_t g = query.min_inter; g <= query.max_inter; ++g) {
      std::uint64_t end = static_cast<std::uint64_t>(post.pos) + g + 1;
      if (end >= doc.size()) break;
      if (token_stem_[doc[end]] == right_stem) {
        PhraseMatch m;
        m.doc_id = post.doc;
        m.start_pos = post.pos;
        m.intervening.reserve(g);
        for (std::uint32_t i = 1; i <= g; ++i) {
          m.intervening.push_back(vocab_[doc[post.pos + i]]);
        }
        matches.push_back(std::move(m));
      }
    }
  }
  // Postings are already in (doc, pos) order; matches from one start position
  // come out shortest first, which keeps the order fully deterministic.
  return matches;
}

std::uint64_t Corpus::count_directed(std::uint32_t left_stem, std::uint32_t right_stem,
                                     std::uint32_t min_inter, std::uint32_t max_inter) const {
  std::uint64_t count = 0;
  for (const Posting& post : stem_postings_[left_stem]) {
    const auto& doc = documents_[post.doc];
    for (std::uint32_t g = min_inter; g <= max_inter; ++g) {
      std::uint64_t end = static_cast<std::uint64_t>(post.pos) + g + 1;
      if (end >= doc.size()) break;
      if (token_stem_[doc[end]] == right_stem) ++count;
    }
  }
  return count;
}

std::uint64_t Corpus::phrase_frequency(std::string_view a, std::string_view b,
                                       std::uint32_t max_len) const {
  if (max_len < 2) {
    throw std::invalid_argument("phrase_frequency: max_len must be >= 2");
  }
  auto sa = porter_stem(lowercase_ascii(a));
  auto sb = porter_stem(lowercase_ascii(b));
  auto a_it = stem_index_.find(sa);
  auto b_it = stem_index_.find(sb);
  if (a_it == stem_index_.end() || b_it == stem_index_.end()) return 0;
  std::uint32_t max_inter = max_len - 2;
  std::uint64_t count = count_directed(a_it->second, b_it->second, 0, max_inter);
  if (a_it->second != b_it->second) {
    count += count_directed(b_it->second, a_it->second, 0, max_inter);
  }
  return count;
}

std::uint64_t Corpus::count_exact_phrase(const std::vector<std::string>& tokens) const {
  if (tokens.empty()) return 0;
  auto first = vocab_index_.find(tokens[0]);
  if (first == vocab_index_.end()) return 0;
  std::vector<std::uint32_t> ids(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = vocab_index_.find(tokens[i]);
    if (it == vocab_index_.end()) return 0;
    ids[i] = it->second;
  }
  std::uint64_t count = 0;
  for (const Posting& post : token_postings_[first->second]) {
    const auto& doc = documents_[post.doc];
    if (post.pos + ids.size() > doc.size()) continue;
    bool ok = true;
    for (std::size_t i = 1; i < ids.size(); ++i) {
      if (doc[post.pos + i] != ids[i]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

const std::string& Corpus::token_at(std::uint32_t doc, std::uint32_t pos) const {
  return vocab_.at(documents_.at(doc).at(pos));
}

const std::string& Corpus::stem_of_token(std::string_view token) const {
  auto it = vocab_index_.find(std::string(token));
  if (it == vocab_index_.end()) {
    static const std::string empty;
    return empty;
  }
  return stems_[token_stem_[it->second]];
}

std::string Corpus::serialize() const {
  std::string out;
  out.append(kIndexMagic);
  put_u32(out, static_cast<std::uint32_t>(vocab_.size()));
  for (const auto& t : vocab_) put_str(out, t);
  put_u32(out, static_cast<std::uint32_t>(documents_.size()));
  for (const auto& doc : documents_) {
    put_u32(out, static_cast<std::uint32_t>(doc.size()));
    for (std::uint32_t id : doc) put_u32(out, id);
  }
  return out;
}

Corpus Corpus::deserialize(std::string_view bytes) {
  ByteReader r(bytes, "corpus index");
  r.expect_magic(kIndexMagic);
  Corpus corpus;
  std::uint32_t n_vocab = r.get_u32();
  corpus.vocab_.reserve(n_vocab);
  for (std::uint32_t i = 0; i < n_vocab; ++i) {
    corpus.vocab_.push_back(r.get_str());
    corpus.vocab_index_.emplace(corpus.vocab_.back(), i);
  }
  std::uint32_t n_docs = r.get_u32();
  corpus.documents_.reserve(n_docs);
  for (std::uint32_t d = 0; d < n_docs; ++d) {
    std::uint32_t n = r.get_u32();
    std::vector<std::uint32_t> doc(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      doc[i] = r.get_u32();
      if (doc[i] >= n_vocab) throw std::runtime_error("corpus index: token id out of range");
    }
    corpus.token_count_ += n;
    corpus.documents_.push_back(std::move(doc));
  }
  if (!r.at_end()) throw std::runtime_error("corpus index: trailing bytes");
  if (corpus.token_count_ == 0) throw std::runtime_error("corpus index: empty corpus");
  corpus.index_documents();
  return corpus;
}

void Corpus::save(const std::filesystem::path& path) const { write_file(path, serialize()); }

Corpus Corpus::load(const std::filesystem::path& path) { return deserialize(read_file(path)); }

}  // namespace lra
