// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/decomposition.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "lra/util.hpp"

namespace lra {

namespace {
constexpr std::string_view kProjectionMagic = "LRAPRJ1";
}

Eigen::MatrixXd to_dense(const PairPatternMatrix& matrix) {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(matrix.rows),
                                                static_cast<Eigen::Index>(matrix.cols));
  for (const auto& c : matrix.cells) {
    dense(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) += c.value;
  }
  return dense;
}

SvdResult truncated_svd_dense(const Eigen::MatrixXd& dense, std::size_t k,
                              double rank_tolerance) {
  if (k < 1) throw std::invalid_argument("truncated_svd: k must be >= 1");
  if (dense.rows() == 0 || dense.cols() == 0) {
    throw std::invalid_argument("truncated_svd: empty matrix");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("truncated_svd: decomposition did not converge (tolerance " +
                             std::to_string(rank_tolerance) + " not reached)");
  }

  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index max_k = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), sv.size());

  // Numeric rank: singular values below rank_tolerance * sigma_max carry no
  // signal and would make U/V columns arbitrary.
  double cutoff = sv.size() > 0 ? sv(0) * rank_tolerance : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
  }
  if (rank == 0) rank = 1;  // all-zero matrix still yields one (zero) triplet
  Eigen::Index k_eff = std::min(max_k, rank);

  SvdResult result;
  result.k = k_eff;
  result.U = svd.matrixU().leftCols(k_eff);
  result.V = svd.matrixV().leftCols(k_eff);
  result.singular_values = sv.head(k_eff);

  // Deterministic sign: flip each (u, v) column pair so the U column's
  // largest-magnitude entry is positive.
  for (Eigen::Index j = 0; j < k_eff; ++j) {
    Eigen::Index arg_max = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < result.U.rows(); ++i) {
      double mag = std::abs(result.U(i, j));
      if (mag > best) {
        best = mag;
        arg_max = i;
      }
    }
    if (result.U(arg_max, j) < 0.0) {
      result.U.col(j) = -result.U.col(j);
      result.V.col(j) = -result.V.col(j);
    }
  }
  return result;
}

SvdResult truncated_svd(const PairPatternMatrix& matrix, std::size_t k, double rank_tolerance) {
  return truncated_svd_dense(to_dense(matrix), k, rank_tolerance);
}

ProjectedSpace project(const SvdResult& svd, RowMap row_map) {
  ProjectedSpace space;
  space.vectors = svd.U * svd.singular_values.asDiagonal();
  space.row_map = std::move(row_map);
  if (static_cast<std::size_t>(space.vectors.rows()) != space.row_map.size()) {
    throw std::invalid_argument("project: row map size does not match U rows");
  }
  return space;
}

std::optional<Eigen::VectorXd> ProjectedSpace::vector_for(const WordPair& directed) const {
  auto row = row_map.index_of(directed);
  if (!row) return std::nullopt;
  return vectors.row(static_cast<Eigen::Index>(*row)).transpose();
}

std::string ProjectedSpace::serialize() const {
  std::string out;
  out.append(kProjectionMagic);
  put_u64(out, static_cast<std::uint64_t>(vectors.rows()));
  put_u32(out, static_cast<std::uint32_t>(vectors.cols()));
  for (std::size_t r = 0; r < row_map.size(); ++r) {
    const WordPair& p = row_map.pair_at(r);
    put_str(out, p.a);
    put_str(out, p.b);
  }
  for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
      put_f64(out, vectors(r, c));
    }
  }
  return out;
}

ProjectedSpace ProjectedSpace::deserialize(std::string_view bytes) {
  ByteReader reader(bytes, "projected space");
  reader.expect_magic(kProjectionMagic);
  std::uint64_t rows = reader.get_u64();
  std::uint32_t k = reader.get_u32();
  ProjectedSpace space;
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::string a = reader.get_str();
    std::string b = reader.get_str();
    std::size_t idx = space.row_map.add_directed(WordPair(a, b));
    if (idx != r) throw std::runtime_error("projected space: duplicate row pair");
  }
  space.vectors.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(k));
  for (Eigen::Index r = 0; r < space.vectors.rows(); ++r) {
    for (Eigen::Index c = 0; c < space.vectors.cols(); ++c) {
      space.vectors(r, c) = reader.get_f64();
    }
  }
  if (!reader.at_end()) throw std::runtime_error("projected space: trailing bytes");
  return space;
}

void ProjectedSpace::save(const std::filesystem::path& path) const {
  write_file(path, serialize());
}

ProjectedSpace ProjectedSpace::load(const std::filesystem::path& path) {
  return deserialize(read_file(path));
}

}  // namespace lra
