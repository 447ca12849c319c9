#pragma once

#include <vector>

#include "avoidance/description.hpp"
#include "avoidance/ideal.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/module.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

/// Builds and validates the ring described by `desc`. Element order is
/// canonical per constructor:
///  - Z/n: residues 0..n-1
///  - products and idealizations: lexicographic tuples, first component
///    most significant
///  - GF and polynomial quotients: coefficient vectors over the basis,
///    little-endian in the base-field indices (so 1 is element 1)
///  - quotients: cosets ordered by their least representative
Ring build_ring(const RingDescription& desc, const Limits& limits = {});

struct ProductRing {
  Ring ring;
  std::vector<RingMap> projections;
};
ProductRing product_ring(const std::vector<Ring>& factors, const Limits& limits = {});

struct QuotientRing {
  Ring ring;
  RingMap projection;
};
/// Throws ImproperIdeal when I = R.
QuotientRing quotient_ring(const Ideal& ideal, const Limits& limits = {});

struct IdealizedRing {
  Ring ring;
  RingMap inclusion;   ///< r -> (r, 0)
  RingMap projection;  ///< (r, m) -> r
  Ideal module_ideal;  ///< {0} x M
};
IdealizedRing idealization(const Module& module, const Limits& limits = {});

}  // namespace avoidance
