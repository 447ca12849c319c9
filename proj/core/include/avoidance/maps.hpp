#pragma once

#include <cstddef>
#include <vector>

#include "avoidance/ideal.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

/// Smallest ideal of the target containing phi(I).
Ideal extend_ideal(const RingMap& phi, const Ideal& ideal);
/// Preimage of J.
Ideal contract_ideal(const RingMap& phi, const Ideal& ideal);

struct MapPredicates {
  bool surjective = false;
  bool injective = false;
  bool every_ideal_extended = false;
  bool cyclically_pure = false;
};

MapPredicates map_predicates(const RingMap& phi, const IdealLattice& source, const IdealLattice& target);
MapPredicates map_predicates(const RingMap& phi, const Limits& limits = {});

/// Every ideal of the source equals the contraction of its extension.
bool is_cyclically_pure(const RingMap& phi, const IdealLattice& source);
bool is_cyclically_pure(const RingMap& phi);

/// Subring generated by `generators` (closure under +, * containing 1),
/// returned with its inclusion map.
struct Subring {
  Ring ring;
  RingMap inclusion;
};
Subring subring_generated(const Ring& ring, const std::vector<Elem>& generators);

/// Ring homomorphisms source -> target found by assigning images to a
/// ring-generating set of the source. At most `limit` maps, canonical order.
std::vector<RingMap> enumerate_homomorphisms(const Ring& source, const Ring& target, std::size_t limit);

}  // namespace avoidance
