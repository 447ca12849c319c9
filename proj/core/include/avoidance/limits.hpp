#pragma once

#include <cstddef>

namespace avoidance {

/// Resource caps shared by the constructors and the lattice enumerators.
struct Limits {
  std::size_t max_ring_size = 4096;
  std::size_t max_ideals = std::size_t{1} << 16;
  /// Rings up to this size get an exhaustive associativity/distributivity
  /// check; larger ones are checked on a fixed pseudo-random sample of triples.
  std::size_t exhaustive_axiom_check = 512;

  /// Defaults, with AVOIDANCE_MAX_RING_SIZE applied when set.
  static Limits from_environment();
};

}  // namespace avoidance
