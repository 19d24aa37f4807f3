// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_DECOMPOSITION_HPP_
#define LRA_DECOMPOSITION_HPP_

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

#include "lra/matrix.hpp"

namespace lra {

/// Truncated singular value decomposition X ~= U_k Sigma_k V_k^T.
/// U and V are column-orthonormal; singular values are non-increasing.
/// Sign convention: each U column's largest-magnitude entry is positive,
/// which makes the factors deterministic across runs.
struct SvdResult {
  Eigen::MatrixXd U;                // rows x k
  Eigen::VectorXd singular_values;  // k, non-increasing
  Eigen::MatrixXd V;                // cols x k
  Eigen::Index k = 0;
};

/// Top-k singular triplets of the (densified) sparse matrix. The effective
/// k is min(k, numeric rank): trailing singular values below
/// rank_tolerance * sigma_max are treated as zero. k < 1 is a contract
/// violation.
SvdResult truncated_svd(const PairPatternMatrix& matrix, std::size_t k,
                        double rank_tolerance = 1e-10);

/// Same decomposition for a dense input (tests and bindings).
SvdResult truncated_svd_dense(const Eigen::MatrixXd& dense, std::size_t k,
                              double rank_tolerance = 1e-10);

Eigen::MatrixXd to_dense(const PairPatternMatrix& matrix);

/// The k-dimensional row space U_k Sigma_k whose pairwise row cosines equal
/// those of the rank-k reconstruction U_k Sigma_k V_k^T.
struct ProjectedSpace {
  Eigen::MatrixXd vectors;  // rows x k
  RowMap row_map;

  /// Row vector for a directed pair, or nullopt when the pair had no
  /// surviving row (its cosines are defined as zero).
  std::optional<Eigen::VectorXd> vector_for(const WordPair& directed) const;

  /// Versioned binary image ("LRAPRJ1" header), byte-identical across runs.
  std::string serialize() const;
  static ProjectedSpace deserialize(std::string_view bytes);
  void save(const std::filesystem::path& path) const;
  static ProjectedSpace load(const std::filesystem::path& path);
};

ProjectedSpace project(const SvdResult& svd, RowMap row_map);

}  // namespace lra

#endif  // LRA_DECOMPOSITION_HPP_
