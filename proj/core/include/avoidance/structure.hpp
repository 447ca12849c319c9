#pragma once

#include <vector>

#include "avoidance/ideal.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

struct LocalFactor {
  Ring ring;             ///< R / m^inf
  RingMap projection;    ///< R -> R / m^inf
  Ideal maximal;         ///< m, in R
  Ideal stable_power;    ///< m^inf, in R
};

/// R as the product of its localizations, realised as R / m^inf for each
/// maximal ideal m.
struct LocalDecomposition {
  Ring ring;
  std::vector<LocalFactor> factors;
};

/// Throws EngineBug if the combined map into the product of factors is not
/// bijective.
LocalDecomposition local_decomposition(const Ring& ring, const Limits& limits = {});

/// The combined map R -> product of factors, with the product ring itself.
struct Reassembly {
  Ring product;
  RingMap combined;
};
Reassembly reassemble(const LocalDecomposition& decomposition, const Limits& limits = {});

struct RingPredicates {
  bool local = false;
  bool pir = false;
  bool bezout = false;
  bool absolutely_flat = false;
  bool chain_ring = false;
};

RingPredicates ring_predicates(const IdealLattice& lattice);
RingPredicates ring_predicates(const Ring& ring, const Limits& limits = {});

struct Theorem6Check {
  bool via_definition = false;
  bool via_local_criterion = false;
};

/// Avoidance by definition versus "every local factor is Bezout" (the
/// infinite-residue-field disjunct never fires for finite rings).
Theorem6Check theorem6_check(const Ring& ring, const Limits& limits = {});

}  // namespace avoidance
