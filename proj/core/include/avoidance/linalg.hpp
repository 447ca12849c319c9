#pragma once

#include <cstddef>
#include <vector>

#include "avoidance/ring.hpp"

namespace avoidance {

using Vector = std::vector<Elem>;
using Matrix = std::vector<Vector>;

/// Field arithmetic on top of a FiniteRing's tables.
class FieldOps {
 public:
  /// Throws NotAField.
  explicit FieldOps(Ring field);

  [[nodiscard]] const FiniteRing& field() const noexcept { return *field_; }
  [[nodiscard]] const Ring& ring() const noexcept { return field_; }
  [[nodiscard]] Elem zero() const noexcept { return field_->zero(); }
  [[nodiscard]] Elem one() const noexcept { return field_->one(); }
  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return field_->add(a, b); }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return field_->sub(a, b); }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return field_->mul(a, b); }
  [[nodiscard]] Elem inv(Elem a) const noexcept { return inverse_[a]; }

 private:
  Ring field_;
  std::vector<Elem> inverse_;
};

struct RowReduction {
  Matrix rref;                       ///< nonzero rows only
  std::vector<std::size_t> pivots;   ///< pivot column per row of `rref`
};

/// Gauss-Jordan elimination. Columns are visited in `column_order`
/// (identity when empty), so earlier columns are preferred as pivots.
RowReduction row_reduce(const FieldOps& k, Matrix rows, std::size_t columns,
                        const std::vector<std::size_t>& column_order = {});

/// Reduces `v` against a reduced row-echelon basis.
Vector reduce_against(const FieldOps& k, const RowReduction& basis, Vector v);

struct LinearAlgebraResult {
  std::size_t rank = 0;
  Matrix row_space_basis;
  Matrix kernel_basis;  ///< right kernel: vectors v with A v = 0
};

LinearAlgebraResult field_linear_algebra(const Ring& field, const Matrix& a, std::size_t columns);

}  // namespace avoidance
