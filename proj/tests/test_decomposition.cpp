// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "lra/decomposition.hpp"

using namespace lra;

namespace {

Eigen::MatrixXd random_sparse(int rows, int cols, double density, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> value(0.1, 5.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (coin(rng) < density) m(r, c) = value(rng);
    }
  }
  return m;
}

/// Independent route to the spectrum: eigenvalues of X^T X (or X X^T).
Eigen::VectorXd singular_values_via_gram(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd gram =
      x.rows() >= x.cols() ? Eigen::MatrixXd(x.transpose() * x) : Eigen::MatrixXd(x * x.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  Eigen::VectorXd values = eig.eigenvalues();  // ascending
  Eigen::VectorXd sv(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    sv(i) = std::sqrt(std::max(0.0, values(values.size() - 1 - i)));
  }
  return sv;
}

PairPatternMatrix to_sparse(const Eigen::MatrixXd& dense) {
  PairPatternMatrix m;
  m.rows = static_cast<std::size_t>(dense.rows());
  m.cols = static_cast<std::size_t>(dense.cols());
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    for (Eigen::Index c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != 0.0) {
        m.cells.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                           dense(r, c)});
      }
    }
  }
  return m;
}

RowMap dummy_rows(std::size_t n) {
  RowMap map;
  for (std::size_t i = 0; i < n; ++i) {
    map.add_directed(WordPair("w" + std::to_string(i), "v" + std::to_string(i)));
  }
  return map;
}

}  // namespace

TEST_CASE("identity matrix has unit singular values") {
  SvdResult r = truncated_svd_dense(Eigen::MatrixXd::Identity(4, 4), 4);
  REQUIRE(r.k == 4);
  for (int i = 0; i < 4; ++i) CHECK(r.singular_values(i) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("diagonal matrix keeps its top-k entries") {
  Eigen::MatrixXd d = Eigen::Vector3d(3.0, 2.0, 1.0).asDiagonal();
  SvdResult r = truncated_svd_dense(d, 2);
  REQUIRE(r.k == 2);
  CHECK(r.singular_values(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.singular_values(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("contract violations") {
  CHECK_THROWS_AS(truncated_svd_dense(Eigen::MatrixXd::Identity(3, 3), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(truncated_svd_dense(Eigen::MatrixXd(), 1), std::invalid_argument);
}

TEST_CASE("random sparse matrices match the Gram-matrix oracle") {
  for (std::uint32_t seed = 1; seed <= 5; ++seed) {
    Eigen::MatrixXd x = random_sparse(40, 60, 0.15, seed);
    SvdResult r = truncated_svd(to_sparse(x), 10);
    Eigen::VectorXd oracle = singular_values_via_gram(x);
    REQUIRE(r.k >= 1);
    for (Eigen::Index i = 0; i < r.k; ++i) {
      CHECK(r.singular_values(i) == doctest::Approx(oracle(i)).epsilon(1e-8));
    }
  }
}

TEST_CASE("factors are column-orthonormal with non-increasing spectrum") {
  Eigen::MatrixXd x = random_sparse(30, 20, 0.3, 99);
  SvdResult r = truncated_svd_dense(x, 12);
  Eigen::MatrixXd ui = r.U.transpose() * r.U - Eigen::MatrixXd::Identity(r.k, r.k);
  Eigen::MatrixXd vi = r.V.transpose() * r.V - Eigen::MatrixXd::Identity(r.k, r.k);
  CHECK(ui.cwiseAbs().maxCoeff() < 1e-8);
  CHECK(vi.cwiseAbs().maxCoeff() < 1e-8);
  for (Eigen::Index i = 0; i + 1 < r.k; ++i) {
    CHECK(r.singular_values(i) >= r.singular_values(i + 1));
  }
  CHECK(r.k <= 20);
}

TEST_CASE("each U column's largest-magnitude entry is positive") {
  Eigen::MatrixXd x = random_sparse(25, 25, 0.2, 7);
  SvdResult r = truncated_svd_dense(x, 8);
  for (Eigen::Index j = 0; j < r.k; ++j) {
    Eigen::Index arg_max = 0;
    r.U.col(j).cwiseAbs().maxCoeff(&arg_max);
    CHECK(r.U(arg_max, j) > 0.0);
  }
}

TEST_CASE("rank-k reconstruction error is non-increasing in k") {
  Eigen::MatrixXd x = random_sparse(20, 25, 0.4, 21);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= 10; ++k) {
    SvdResult r = truncated_svd_dense(x, k);
    Eigen::MatrixXd recon = r.U * r.singular_values.asDiagonal() * r.V.transpose();
    double err = (x - recon).norm();
    CHECK(err <= prev + 1e-12);
    prev = err;
  }
}

TEST_CASE("full-rank reconstruction recovers the input") {
  Eigen::MatrixXd x = random_sparse(15, 12, 0.5, 33);
  SvdResult r = truncated_svd_dense(x, 12);  // k clamps to the numeric rank
  Eigen::MatrixXd recon = r.U * r.singular_values.asDiagonal() * r.V.transpose();
  CHECK((x - recon).norm() / x.norm() < 1e-8);
}

TEST_CASE("projection scales U columns by the singular values") {
  SUBCASE("unit column against sigma = 5") {
    SvdResult r;
    r.k = 1;
    r.U = Eigen::MatrixXd::Zero(3, 1);
    r.U(0, 0) = 1.0;
    r.V = Eigen::MatrixXd::Zero(2, 1);
    r.V(0, 0) = 1.0;
    r.singular_values = Eigen::VectorXd::Constant(1, 5.0);
    ProjectedSpace space = project(r, dummy_rows(3));
    CHECK(space.vectors(0, 0) == doctest::Approx(5.0));
    CHECK(space.vectors(1, 0) == doctest::Approx(0.0));
    CHECK(space.vectors(2, 0) == doctest::Approx(0.0));
  }
  SUBCASE("diag(3, 2) projects to its rows up to sign") {
    Eigen::MatrixXd d = Eigen::Vector2d(3.0, 2.0).asDiagonal();
    ProjectedSpace space = project(truncated_svd_dense(d, 2), dummy_rows(2));
    CHECK(std::abs(space.vectors(0, 0)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(space.vectors(0, 1)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(space.vectors(1, 1)) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("projected row cosines equal reconstruction row cosines") {
  auto row_cosine = [](const Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j) {
    double ni = m.row(i).norm(), nj = m.row(j).norm();
    if (ni == 0.0 || nj == 0.0) return 0.0;
    return m.row(i).dot(m.row(j)) / (ni * nj);
  };
  Eigen::MatrixXd x = random_sparse(20, 30, 0.25, 44);
  SvdResult r = truncated_svd_dense(x, 5);
  Eigen::MatrixXd projected = r.U * r.singular_values.asDiagonal();
  Eigen::MatrixXd recon = projected * r.V.transpose();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      if (recon.row(i).norm() == 0.0 || recon.row(j).norm() == 0.0) continue;
      CHECK(std::abs(row_cosine(projected, i, j) - row_cosine(recon, i, j)) <= 1e-10);
    }
  }
}

TEST_CASE("projected space serialization round-trips byte-identically") {
  Eigen::MatrixXd x = random_sparse(10, 8, 0.4, 55);
  ProjectedSpace space = project(truncated_svd_dense(x, 4), dummy_rows(10));
  std::string bytes = space.serialize();
  CHECK(bytes.substr(0, 7) == "LRAPRJ1");
  ProjectedSpace loaded = ProjectedSpace::deserialize(bytes);
  CHECK(loaded.serialize() == bytes);
  CHECK(loaded.vectors.isApprox(space.vectors, 0.0));
  auto row = loaded.vector_for(WordPair("w3", "v3"));
  REQUIRE(row.has_value());
  CHECK(row->isApprox(space.vectors.row(3).transpose(), 0.0));
  CHECK_FALSE(loaded.vector_for(WordPair("nope", "pair")).has_value());
}
