#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "avoidance/builder.hpp"
#include "avoidance/ideal.hpp"
#include "avoidance/harness/corpus.hpp"

namespace fixtures {

using namespace avoidance;

inline Ring zmod(std::uint64_t n) { return build_ring(desc::zmod(n)); }
inline Ring gf(std::uint64_t p, unsigned k = 1) { return build_ring(desc::gf(p, k)); }

/// F_q[x,y]/(x,y)^2.
inline RingDescription plane_desc(std::uint64_t p, unsigned k = 1) {
  return desc::poly_quotient(desc::gf(p, k), {"x", "y"}, 2);
}
inline Ring plane(std::uint64_t p, unsigned k = 1) { return build_ring(plane_desc(p, k)); }

/// Ideal from comma-separated generator names.
inline Ideal ideal(const Ring& ring, const std::string& gens) {
  std::vector<Elem> elems;
  std::string cur;
  for (char c : gens + ",") {
    if (c == ',') {
      if (!cur.empty()) elems.push_back(ring->parse_element(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return ideal_generated(ring, elems);
}

inline std::vector<std::string> names(const Ring& ring, const ElementSet& set) {
  std::vector<std::string> out;
  set.for_each([&](Elem e) { out.push_back(ring->name(e)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Golden rings plus a fixed random corpus of small rings, for property
/// tests that need a brute-force oracle.
inline const std::vector<Ring>& small_rings(std::size_t max_size = 64) {
  static const std::vector<Ring> rings = [max_size] {
    harness::CorpusParams params;
    params.max_ring_size = max_size;
    params.count = 40;
    const auto corpus = harness::generate_corpus(20241, params);
    std::vector<Ring> out;
    for (const auto& d : corpus.specs) out.push_back(build_ring(d));
    return out;
  }();
  return rings;
}

}  // namespace fixtures
