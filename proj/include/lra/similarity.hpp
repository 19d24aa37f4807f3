// Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.

#ifndef LRA_SIMILARITY_HPP_
#define LRA_SIMILARITY_HPP_

#include <span>

#include "lra/decomposition.hpp"
#include "lra/pairspace.hpp"

namespace lra {

/// cos(u, v) = u.v / (|u| |v|), defined as 0 when either norm is 0. The
/// zero convention is what makes pairs absent from the corpus score zero.
/// Length mismatch is a contract violation.
double cosine(std::span<const double> u, std::span<const double> v);
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

struct SimilarityResult {
  double value = 0.0;            // in [-1, 1]
  std::size_t cosines_considered = 0;  // qualifying cosines averaged
  double original_cosine = 0.0;
};

/// Steps 11-12: cosines between every version of pair1 and every version of
/// pair2 (A:B-order rows only, up to (num_filter+1)^2 of them); versions
/// without a surviving row contribute 0. The result averages the cosines
/// that are >= the original-original cosine, which always qualifies itself.
SimilarityResult relational_similarity(const PairVersions& pair1, const PairVersions& pair2,
                                       const ProjectedSpace& space);

}  // namespace lra

#endif  // LRA_SIMILARITY_HPP_
