// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lra {

std::size_t RowMap::add_directed(const WordPair& directed) {
  auto [it, inserted] = index_.try_emplace(directed.key(), rows_.size());
  if (inserted) rows_.push_back(directed);
  return it->second;
}

std::size_t RowMap::add_pair(const WordPair& pair) {
  std::size_t ab = add_directed(pair);
  add_directed(pair.reversed());
  return ab;
}

std::optional<std::size_t> RowMap::index_of(const WordPair& directed) const {
  auto it = index_.find(directed.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RowMap map_pairs_to_rows(const std::vector<PairVersions>& pair_versions) {
  RowMap map;
  for (const auto& pv : pair_versions) {
    for (const WordPair& version : pv.versions()) map.add_pair(version);
  }
  return map;
}

ColumnMap::ColumnMap(const PatternTable& table) : table_(&table) {
  pattern_index_.reserve(table.size());
  for (std::size_t i = 0; i < table.patterns.size(); ++i) {
    pattern_index_.emplace(table.patterns[i].render(), i);
  }
}

std::optional<std::size_t> ColumnMap::find_pattern(const std::string& rendered) const {
  auto it = pattern_index_.find(rendered);
  if (it == pattern_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> PairPatternMatrix::column_sums() const {
  std::vector<double> sums(cols, 0.0);
  for (const auto& c : cells) sums[c.col] += c.value;
  return sums;
}

std::vector<double> PairPatternMatrix::row_for(std::size_t row) const {
  std::vector<double> out(cols, 0.0);
  for (const auto& c : cells) {
    if (c.row == row) out[c.col] = c.value;
  }
  return out;
}

MatrixBuildResult build_matrix(const std::vector<PairVersions>& pair_versions,
                               const PhraseTable& phrases, const PatternTable& table,
                               std::uint32_t max_inter) {
  RowMap full_map = map_pairs_to_rows(pair_versions);
  ColumnMap columns(table);

  // counts[row * cols + col] accumulated per occurrence via the wildcard
  // closure of its intervening tokens: a phrase matches exactly the patterns
  // in its own 2^m expansion.
  const std::size_t cols = columns.size();
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  auto bump = [&](std::size_t row, std::size_t col) {
    counts[static_cast<std::uint64_t>(row) * cols + col] += 1;
  };

  for (const auto& [pair, occs] : phrases) {
    auto row_ab = full_map.index_of(pair);
    auto row_ba = full_map.index_of(pair.reversed());
    if (!row_ab || !row_ba) continue;  // phrase table for a pair outside the row map
    for (const auto& occ : occs) {
      for (const Pattern& p : expand_patterns(occ.intervening, max_inter)) {
        auto pattern_idx = columns.find_pattern(p.render());
        if (!pattern_idx) continue;  // pattern did not survive mining
        if (occ.direction == PhraseDirection::kForward) {
          // "a .. b": forward column of the A:B row, reverse of the B:A row.
          bump(*row_ab, columns.column_of(*pattern_idx, PhraseDirection::kForward));
          bump(*row_ba, columns.column_of(*pattern_idx, PhraseDirection::kReverse));
        } else {
          // "b .. a": reverse column of the A:B row, forward of the B:A row.
          bump(*row_ab, columns.column_of(*pattern_idx, PhraseDirection::kReverse));
          bump(*row_ba, columns.column_of(*pattern_idx, PhraseDirection::kForward));
        }
      }
    }
  }

  // Compact away all-zero rows, preserving the original row order.
  std::vector<bool> nonzero(full_map.size(), false);
  for (const auto& [key, value] : counts) {
    if (value > 0) nonzero[key / cols] = true;
  }

  MatrixBuildResult result;
  result.rows_before_drop = full_map.size();
  std::vector<std::size_t> new_row(full_map.size(), SIZE_MAX);
  for (std::size_t r = 0; r < full_map.size(); ++r) {
    if (nonzero[r]) {
      new_row[r] = result.row_map.add_directed(full_map.pair_at(r));
    } else {
      result.dropped_rows.push_back(full_map.pair_at(r));
    }
  }

  result.matrix.rows = result.row_map.size();
  result.matrix.cols = cols;
  result.matrix.cells.reserve(counts.size());
  for (const auto& [key, value] : counts) {
    std::size_t old_row = key / cols;
    result.matrix.cells.push_back({static_cast<std::uint32_t>(new_row[old_row]),
                                   static_cast<std::uint32_t>(key % cols),
                                   static_cast<double>(value)});
  }
  std::sort(result.matrix.cells.begin(), result.matrix.cells.end(),
            [](const MatrixCell& x, const MatrixCell& y) {
              if (x.row != y.row) return x.row < y.row;
              return x.col < y.col;
            });
  return result;
}

LogEntropyResult log_entropy_transform(const PairPatternMatrix& matrix) {
  LogEntropyResult result;
  result.matrix.rows = matrix.rows;
  result.matrix.cols = matrix.cols;
  result.column_weights.assign(matrix.cols, 0.0);

  const std::vector<double> sums = matrix.column_sums();
  const double log_n = matrix.rows > 0 ? std::log(static_cast<double>(matrix.rows)) : 0.0;

  // w_j = 1 - H_j / ln(n) where H_j is the column's Shannon entropy. A
  // single-row matrix has ln(n) = 0 and every column concentrated: w = 1.
  std::vector<double> entropy(matrix.cols, 0.0);
  for (const auto& c : matrix.cells) {
    if (c.value <= 0.0) continue;
    double p = c.value / sums[c.col];
    entropy[c.col] -= p * std::log(p);
  }
  for (std::size_t j = 0; j < matrix.cols; ++j) {
    if (sums[j] <= 0.0) {
      result.column_weights[j] = 0.0;  // empty column
    } else if (log_n == 0.0) {
      result.column_weights[j] = 1.0;
    } else {
      double w = 1.0 - entropy[j] / log_n;
      result.column_weights[j] = std::clamp(w, 0.0, 1.0);
    }
  }

  result.matrix.cells.reserve(matrix.cells.size());
  for (const auto& c : matrix.cells) {
    double transformed = std::log(c.value + 1.0) * result.column_weights[c.col];
    result.matrix.cells.push_back({c.row, c.col, transformed});
  }
  return result;
}

}  // namespace lra
