// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_MATRIX_HPP_
#define LRA_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lra/patterns.hpp"

namespace lra {

/// Bijection between matrix rows and directed pairs. For every pair version
/// A:B both A:B and B:A get a row; duplicates across input pairs collapse.
class RowMap {
 public:
  /// Inserts both orders of the pair if absent. Returns the A:B row index.
  std::size_t add_pair(const WordPair& pair);

  /// Inserts one directed row if absent and returns its index.
  std::size_t add_directed(const WordPair& directed);

  std::optional<std::size_t> index_of(const WordPair& directed) const;
  const WordPair& pair_at(std::size_t row) const { return rows_.at(row); }
  std::size_t size() const { return rows_.size(); }
  const std::vector<WordPair>& rows() const { return rows_; }

 private:
  std::vector<WordPair> rows_;
  std::unordered_map<std::string, std::size_t> index_;  // "a:b" -> row
};

/// Builds the step-5 row map over all versions of all input pairs,
/// in input order, original before alternates, A:B before B:A.
RowMap map_pairs_to_rows(const std::vector<PairVersions>& pair_versions);

/// Column layout over the mined patterns: pattern j owns columns 2j
/// (word1 P word2) and 2j+1 (word2 P word1).
class ColumnMap {
 public:
  explicit ColumnMap(const PatternTable& table);

  std::size_t size() const { return 2 * table_->size(); }
  std::size_t column_of(std::size_t pattern_idx, PhraseDirection dir) const {
    return 2 * pattern_idx + (dir == PhraseDirection::kReverse ? 1 : 0);
  }
  std::size_t pattern_of(std::size_t col) const { return col / 2; }
  PhraseDirection direction_of(std::size_t col) const {
    return col % 2 == 0 ? PhraseDirection::kForward : PhraseDirection::kReverse;
  }
  const PatternTable& patterns() const { return *table_; }

  /// Pattern index by canonical rendering, if mined.
  std::optional<std::size_t> find_pattern(const std::string& rendered) const;

 private:
  const PatternTable* table_;
  std::unordered_map<std::string, std::size_t> pattern_index_;
};

struct MatrixCell {
  std::uint32_t row;
  std::uint32_t col;
  double value;
};

/// Sparse pair-by-pattern matrix in coordinate form, cells sorted by
/// (row, col) with no explicit zeros stored at build time.
struct PairPatternMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixCell> cells;

  std::vector<double> column_sums() const;
  std::vector<double> row_for(std::size_t row) const;  // dense copy of one row
};

struct MatrixBuildResult {
  PairPatternMatrix matrix;
  RowMap row_map;                     // surviving (nonzero) rows only
  std::vector<WordPair> dropped_rows; // directed pairs with all-zero rows
  std::size_t rows_before_drop = 0;
};

/// Step-7 cell fill: cell(i, j) counts phrase occurrences of row i's pair
/// whose intervening tokens match column j's pattern in column j's
/// direction. All-zero rows are dropped from the matrix but reported.
MatrixBuildResult build_matrix(const std::vector<PairVersions>& pair_versions,
                               const PhraseTable& phrases, const PatternTable& table,
                               std::uint32_t max_inter);

struct LogEntropyResult {
  PairPatternMatrix matrix;
  std::vector<double> column_weights;  // w_j in [0, 1]
};

/// Step-8 transform: cell f -> ln(f+1) * w_j with
/// w_j = 1 + sum_i p_ij ln(p_ij) / ln(n), p_ij = f_ij / column sum.
/// Empty columns get w_j = 0; the stored sparsity pattern is unchanged.
LogEntropyResult log_entropy_transform(const PairPatternMatrix& matrix);

}  // namespace lra

#endif  // LRA_MATRIX_HPP_
