#include "avoidance/linalg.hpp"

#include <numeric>
#include <utility>

#include "avoidance/error.hpp"

namespace avoidance {

FieldOps::FieldOps(Ring field) : field_(std::move(field)), inverse_(field_->size(), field_->zero()) {
  for (Elem a = 0; a < field_->size(); ++a) {
    if (a == field_->zero()) continue;
    auto inv = field_->inverse(a);
    if (!inv) fail(ErrorKind::NotAField, "element " + field_->name(a) + " is not invertible");
    inverse_[a] = *inv;
  }
}

RowReduction row_reduce(const FieldOps& k, Matrix rows, std::size_t columns,
                        const std::vector<std::size_t>& column_order) {
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(columns);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  for (const auto& row : rows)
    if (row.size() != columns) fail(ErrorKind::MalformedDescription, "ragged matrix");

  RowReduction out;
  std::size_t rank = 0;
  for (std::size_t col : order) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == k.zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem scale = k.inv(rows[rank][col]);
    for (auto& e : rows[rank]) e = k.mul(e, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == k.zero()) continue;
      const Elem factor = rows[i][col];
      for (std::size_t c = 0; c < columns; ++c) rows[i][c] = k.sub(rows[i][c], k.mul(factor, rows[rank][c]));
    }
    out.pivots.push_back(col);
    ++rank;
    if (rank == rows.size()) break;
  }
  rows.resize(rank);
  out.rref = std::move(rows);
  return out;
}

Vector reduce_against(const FieldOps& k, const RowReduction& basis, Vector v) {
  for (std::size_t i = 0; i < basis.rref.size(); ++i) {
    const Elem c = v[basis.pivots[i]];
    if (c == k.zero()) continue;
    for (std::size_t col = 0; col < v.size(); ++col) v[col] = k.sub(v[col], k.mul(c, basis.rref[i][col]));
  }
  return v;
}

LinearAlgebraResult field_linear_algebra(const Ring& field, const Matrix& a, std::size_t columns) {
  const FieldOps k(field);
  auto reduced = row_reduce(k, a, columns);
  LinearAlgebraResult out;
  out.rank = reduced.rref.size();
  out.row_space_basis = reduced.rref;
  std::vector<bool> is_pivot(columns, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns, k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < reduced.rref.size(); ++i)
      v[reduced.pivots[i]] = k.sub(k.zero(), reduced.rref[i][free]);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace avoidance
