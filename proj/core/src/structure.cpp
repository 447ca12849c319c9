#include "avoidance/structure.hpp"

#include <algorithm>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"

namespace avoidance {

namespace {

Ideal stable_power(const Ideal& m) {
  Ideal power = m;
  while (true) {
    Ideal next = ideal_product(power, m);
    if (next == power) return power;
    power = std::move(next);
  }
}

/// Index in the product ring of the tuple of images of x.
Elem tuple_index(const LocalDecomposition& d, Elem x) {
  std::size_t idx = 0;
  for (const auto& f : d.factors) idx = idx * f.ring->size() + f.projection(x);
  return static_cast<Elem>(idx);
}

}  // namespace

LocalDecomposition local_decomposition(const Ring& ring, const Limits& limits) {
  const auto lattice = all_ideals(ring, limits);
  const auto spec = spectrum(lattice);
  LocalDecomposition out{ring, {}};
  for (const auto& m : spec.maximals) {
    Ideal power = stable_power(m);
    auto q = quotient_ring(power, limits);
    out.factors.push_back(LocalFactor{q.ring, q.projection, m, std::move(power)});
  }
  std::size_t total = 1;
  for (const auto& f : out.factors) total *= f.ring->size();
  if (total != ring->size()) fail(ErrorKind::EngineBug, "local factors do not multiply to the ring size");
  ElementSet seen(total);
  for (Elem x = 0; x < ring->size(); ++x) {
    const Elem t = tuple_index(out, x);
    if (seen.test(t)) fail(ErrorKind::EngineBug, "combined map to the local factors is not injective");
    seen.set(t);
  }
  return out;
}

Reassembly reassemble(const LocalDecomposition& decomposition, const Limits& limits) {
  if (decomposition.factors.size() == 1) {
    const auto& f = decomposition.factors.front();
    return Reassembly{f.ring, f.projection};
  }
  std::vector<Ring> rings;
  for (const auto& f : decomposition.factors) rings.push_back(f.ring);
  auto product = product_ring(rings, limits);
  std::vector<Elem> image(decomposition.ring->size());
  for (Elem x = 0; x < image.size(); ++x) image[x] = tuple_index(decomposition, x);
  RingMap combined(decomposition.ring, product.ring, std::move(image));
  if (!combined.is_injective() || !combined.is_surjective())
    fail(ErrorKind::EngineBug, "reassembly map is not bijective");
  return Reassembly{product.ring, std::move(combined)};
}

RingPredicates ring_predicates(const IdealLattice& lattice) {
  const auto& r = *lattice.ring();
  RingPredicates p;
  p.local = spectrum(lattice).maximals.size() == 1;
  p.pir = std::all_of(lattice.begin(), lattice.end(), [](const Ideal& i) { return is_principal(i); });
  // Every ideal of a finite ring is finitely generated.
  p.bezout = p.pir;
  p.absolutely_flat = true;
  for (Elem a = 0; a < r.size() && p.absolutely_flat; ++a) {
    const Elem a2 = r.mul(a, a);
    bool found = false;
    for (Elem x = 0; x < r.size() && !found; ++x) found = r.mul(a2, x) == a;
    p.absolutely_flat = found;
  }
  p.chain_ring = true;
  for (std::size_t i = 0; i < lattice.size() && p.chain_ring; ++i)
    for (std::size_t j = i + 1; j < lattice.size() && p.chain_ring; ++j)
      p.chain_ring = lattice.includes(i, j);
  return p;
}

RingPredicates ring_predicates(const Ring& ring, const Limits& limits) {
  return ring_predicates(all_ideals(ring, limits));
}

Theorem6Check theorem6_check(const Ring& ring, const Limits& limits) {
  Theorem6Check out;
  out.via_definition = is_avoidance_ring(ring, limits);
  const auto d = local_decomposition(ring, limits);
  out.via_local_criterion = std::all_of(d.factors.begin(), d.factors.end(), [&](const LocalFactor& f) {
    return ring_predicates(f.ring, limits).bezout;
  });
  return out;
}

}  // namespace avoidance
