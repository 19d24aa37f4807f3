// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#include "lra/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lra {

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine: vector lengths differ");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine: vector lengths differ");
  }
  double nu = u.norm();
  double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
}

SimilarityResult relational_similarity(const PairVersions& pair1, const PairVersions& pair2,
                                       const ProjectedSpace& space) {
  const std::vector<WordPair> versions1 = pair1.versions();
  const std::vector<WordPair> versions2 = pair2.versions();

  std::vector<std::optional<Eigen::VectorXd>> rows1, rows2;
  rows1.reserve(versions1.size());
  rows2.reserve(versions2.size());
  for (const auto& v : versions1) rows1.push_back(space.vector_for(v));
  for (const auto& v : versions2) rows2.push_back(space.vector_for(v));

  auto cos_or_zero = [](const std::optional<Eigen::VectorXd>& u,
                        const std::optional<Eigen::VectorXd>& v) {
    if (!u || !v) return 0.0;
    return cosine(*u, *v);
  };

  SimilarityResult result;
  // versions()[0] is the original on both sides.
  result.original_cosine = cos_or_zero(rows1[0], rows2[0]);

  double sum = 0.0;
  std::size_t qualifying = 0;
  for (const auto& u : rows1) {
    for (const auto& v : rows2) {
      double c = cos_or_zero(u, v);
      if (c >= result.original_cosine) {
        sum += c;
        ++qualifying;
      }
    }
  }
  // The original-original cosine trivially satisfies c >= itself, so the
  // qualifying set is never empty.
  result.cosines_considered = qualifying;
  result.value = sum / static_cast<double>(qualifying);
  return result;
}

}  // namespace lra
