#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/description.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/linalg.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

/// One term c * x1^e1 * ... of a polynomial over a base field.
struct PolyTerm {
  Elem coeff = 0;
  std::vector<unsigned> exponents;
};

/// Parses `c*x^a*y^b + ...`. Coefficients are decimal integers (read as
/// n * 1) or a parenthesised base-field element name such as `(a+1)`; a
/// leading `-` negates a term. Unknown variable names are rejected.
std::vector<PolyTerm> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                       const FiniteRing& base);

/// A finite-dimensional commutative algebra over a finite field, given by
/// a basis and structure constants.
struct AlgebraPresentation {
  Ring field;
  std::vector<std::string> basis_names;
  std::vector<unsigned> basis_degrees;
  /// structure[i * dim + j] = coordinates of basis_i * basis_j.
  std::vector<Vector> structure;
  Vector unit;

  [[nodiscard]] std::size_t dim() const noexcept { return basis_names.size(); }
};

/// Materialises the algebra's tables. Elements are coordinate vectors,
/// indexed little-endian in the field's element indices.
Ring algebra_ring(const AlgebraPresentation& algebra, RingDescription desc, const Limits& limits);

/// Coordinates of element `e` of a ring produced by algebra_ring.
Vector algebra_coordinates(std::size_t field_size, std::size_t dim, Elem e);
Elem algebra_element(std::size_t field_size, const Vector& coords);

/// field[vars] / (monomials of weighted degree >= truncation, relations).
/// The relation ideal is the span of all monomial multiples of the
/// relations; the quotient basis is the set of standard monomials, with
/// higher-degree monomials preferred as pivots. Throws OneEqualsZero if the
/// relations generate the unit ideal.
AlgebraPresentation truncated_quotient(const Ring& field, const std::vector<std::string>& vars,
                                       const std::vector<unsigned>& weights, unsigned truncation,
                                       const std::vector<std::vector<PolyTerm>>& relations);

}  // namespace avoidance
