#pragma once

#include <string>
#include <vector>

#include "avoidance/algebra.hpp"
#include "avoidance/description.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

struct GradedBasisElement {
  std::string name;
  unsigned degree = 0;
};

/// A truncated N-graded algebra over a finite field K, with R_0 = K.
struct GradedAlgebra {
  Ring field;
  std::vector<GradedBasisElement> basis;
  AlgebraPresentation presentation;
  unsigned truncation = 1;
  Ring ring;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Relations must be homogeneous of weighted degree in [2, truncation) and
/// carry no term that is a single variable (so the relation span lies in
/// the square of the irrelevant ideal).
/// Throws NonHomogeneousRelation, LinearRelation, SizeBound.
GradedAlgebra build_graded(const RingDescription& field, const std::vector<GradedVar>& vars, unsigned truncation,
                           const std::vector<std::string>& relations, const Limits& limits = {});
GradedAlgebra build_graded(const Graded& desc, const Limits& limits = {});

/// Homogeneous representatives of a basis of m/m^2, lowest degree first.
/// Each is returned as an element index of `algebra.ring`.
std::vector<Elem> minimal_generators(const GradedAlgebra& algebra);

/// dim m - dim m^2 over K.
std::size_t cotangent_dimension(const GradedAlgebra& algebra);

struct GradedClassification {
  bool avoidance = false;
  bool pir = false;
  bool truncated_univariate = false;
};

/// Throws EngineBug if avoidance holds without PIR or without a single
/// generator.
GradedClassification graded_avoidance_classify(const GradedAlgebra& algebra, const Limits& limits = {});

}  // namespace avoidance
