#include "avoidance/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "avoidance/error.hpp"

namespace avoidance {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(ErrorKind::RingMismatch, "ideals belong to different rings");
}

/// Grows the subgroup `result` (listed in `members`) by the cyclic group of t.
void adjoin_cyclic(const FiniteRing& ring, ElementSet& result, std::vector<Elem>& members, Elem t) {
  if (result.test(t)) return;
  const ElementSet base_set = result;
  const std::vector<Elem> base = members;
  for (Elem c = t; !base_set.test(c); c = ring.add(c, t)) {
    for (Elem s : base) {
      const Elem x = ring.add(s, c);
      result.set(x);
      members.push_back(x);
    }
  }
}

ElementSet principal_set(const FiniteRing& ring, Elem g) {
  ElementSet s(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) s.set(ring.mul(r, g));
  return s;
}

/// Additive closure of a set that is already closed under the ring action.
ElementSet additive_closure(const FiniteRing& ring, const ElementSet& seed) {
  ElementSet result(ring.size());
  result.set(ring.zero());
  std::vector<Elem> members{ring.zero()};
  seed.for_each([&](Elem t) { adjoin_cyclic(ring, result, members, t); });
  return result;
}

}  // namespace

Ideal Ideal::checked(Ring ring, ElementSet members) {
  if (members.universe() != ring->size()) fail(ErrorKind::MalformedDescription, "member set has the wrong universe");
  if (!is_ideal(*ring, members)) fail(ErrorKind::MalformedDescription, "member set is not an ideal");
  return Ideal(std::move(ring), std::move(members));
}

Ideal Ideal::zero(const Ring& ring) {
  ElementSet s(ring->size());
  s.set(ring->zero());
  return Ideal(ring, std::move(s), std::vector<Elem>{});
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, ring->all_elements(), std::vector<Elem>{ring->one()}); }

bool is_ideal(const FiniteRing& ring, const ElementSet& members) {
  if (members.universe() != ring.size() || !members.test(ring.zero())) return false;
  const auto elems = members.to_vector();
  for (Elem a : elems) {
    for (Elem b : elems)
      if (!members.test(ring.add(a, b))) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!members.test(ring.mul(r, a))) return false;
  }
  return true;
}

ElementSet subgroup_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  if (a.count() < b.count()) return subgroup_sum(ring, b, a);
  ElementSet result = a;
  std::vector<Elem> members = a.to_vector();
  b.for_each([&](Elem t) { adjoin_cyclic(ring, result, members, t); });
  return result;
}

Ideal principal_ideal(const Ring& ring, Elem generator) {
  return Ideal(ring, principal_set(*ring, generator), std::vector<Elem>{generator});
}

Ideal ideal_generated(const Ring& ring, const std::vector<Elem>& generators) {
  ElementSet result(ring->size());
  result.set(ring->zero());
  for (Elem g : generators) {
    if (g >= ring->size()) fail(ErrorKind::MalformedDescription, "generator outside the ring");
    if (!result.test(g)) result = subgroup_sum(*ring, result, principal_set(*ring, g));
  }
  return Ideal(ring, std::move(result), generators);
}

std::vector<Elem> small_generating_set(const Ideal& ideal) {
  const auto& ring = ideal.r();
  const std::size_t target = ideal.size();
  if (target == 1) return {};
  const auto members = ideal.members().to_vector();
  for (Elem x : members)
    if (principal_set(ring, x).count() == target) return {x};
  std::vector<Elem> gens;
  ElementSet current(ring.size());
  current.set(ring.zero());
  for (Elem x : members) {
    if (current.test(x)) continue;
    gens.push_back(x);
    current = subgroup_sum(ring, current, principal_set(ring, x));
  }
  return gens;
}

std::string ideal_label(const Ideal& ideal) {
  const auto gens = small_generating_set(ideal);
  if (gens.empty()) return "(" + ideal.r().name(ideal.r().zero()) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ",";
    out += ideal.r().name(gens[i]);
  }
  return out + ")";
}

IdealLattice::IdealLattice(Ring ring, std::vector<Ideal> ideals) : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end(),
            [](const Ideal& a, const Ideal& b) { return a.members() < b.members(); });
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (ideals_[i].ring() != ring_) fail(ErrorKind::RingMismatch, "lattice ideal from another ring");
    index_.emplace(ideals_[i].members(), i);
  }
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const {
  if (ideal.ring() != ring_) fail(ErrorKind::RingMismatch, "ideal is not from the lattice's ring");
  auto i = index_of(ideal.members());
  if (!i) fail(ErrorKind::EngineBug, "ideal missing from lattice");
  return *i;
}

std::vector<std::size_t> IdealLattice::proper_subideals(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < i; ++k)
    if (ideals_[k].is_subset_of(ideals_[i])) out.push_back(k);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> IdealLattice::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 0; j < ideals_.size(); ++j) {
    const auto below = proper_subideals(j);
    for (std::size_t a = 0; a < below.size(); ++a) {
      bool covered = true;
      for (std::size_t b = a + 1; b < below.size() && covered; ++b)
        if (ideals_[below[a]].is_subset_of(ideals_[below[b]])) covered = false;
      if (covered) edges.emplace_back(below[a], j);
    }
  }
  return edges;
}

IdealLattice all_ideals(const Ring& ring, const Limits& limits) {
  const auto& r = *ring;
  struct Entry {
    ElementSet members;
    std::vector<Elem> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::pair<Elem, ElementSet>> principals;

  auto insert = [&](ElementSet s, std::vector<Elem> gens) -> bool {
    if (seen.count(s) != 0) return false;
    if (found.size() >= limits.max_ideals)
      fail(ErrorKind::LatticeBound, "more than " + std::to_string(limits.max_ideals) + " ideals");
    seen.emplace(s, found.size());
    found.push_back({std::move(s), std::move(gens)});
    return true;
  };

  for (Elem x = 0; x < r.size(); ++x) {
    auto p = principal_set(r, x);
    if (insert(p, x == r.zero() ? std::vector<Elem>{} : std::vector<Elem>{x})) principals.emplace_back(x, p);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [x, p] : principals) {
      if (found[i].members.test(x)) continue;
      auto s = subgroup_sum(r, found[i].members, p);
      auto gens = found[i].gens;
      gens.push_back(x);
      insert(std::move(s), std::move(gens));
    }
  }

  std::vector<Ideal> ideals;
  ideals.reserve(found.size());
  for (auto& e : found) ideals.emplace_back(ring, std::move(e.members), std::move(e.gens));
  return IdealLattice(ring, std::move(ideals));
}

Ideal ideal_combine(IdealOp op, const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  const auto& r = *ring;
  switch (op) {
    case IdealOp::Sum: {
      std::optional<std::vector<Elem>> gens;
      if (a.generators() && b.generators()) {
        gens = *a.generators();
        gens->insert(gens->end(), b.generators()->begin(), b.generators()->end());
      }
      return Ideal(ring, subgroup_sum(r, a.members(), b.members()), std::move(gens));
    }
    case IdealOp::Product: {
      if (a.generators() && b.generators()) {
        std::vector<Elem> gens;
        for (Elem g : *a.generators())
          for (Elem h : *b.generators()) gens.push_back(r.mul(g, h));
        return ideal_generated(ring, gens);
      }
      ElementSet products(r.size());
      const auto bs = b.members().to_vector();
      a.members().for_each([&](Elem x) {
        for (Elem y : bs) products.set(r.mul(x, y));
      });
      return Ideal(ring, additive_closure(r, products));
    }
    case IdealOp::Intersection:
      return Ideal(ring, a.members() & b.members());
    case IdealOp::Colon: {
      const auto bs = b.generators() ? *b.generators() : b.members().to_vector();
      ElementSet out(r.size());
      for (Elem x = 0; x < r.size(); ++x) {
        bool inside = true;
        for (Elem y : bs)
          if (!a.contains(r.mul(x, y))) {
            inside = false;
            break;
          }
        if (inside) out.set(x);
      }
      return Ideal(ring, std::move(out));
    }
  }
  fail(ErrorKind::EngineBug, "unknown ideal operation");
}

Ideal ideal_power(const Ideal& a, unsigned d) {
  if (d == 0) fail(ErrorKind::MalformedDescription, "ideal power needs d >= 1");
  Ideal result = a;
  for (unsigned i = 1; i < d; ++i) {
    Ideal next = ideal_product(result, a);
    if (next == result) break;
    result = std::move(next);
  }
  return result;
}

Ideal radical(const Ideal& a) {
  const auto& r = a.r();
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (a.contains(r.pow(x, r.size()))) out.set(x);
  return Ideal(a.ring(), std::move(out));
}

Ideal annihilator(const Ideal& a) {
  const auto& r = a.r();
  const auto as = a.generators() ? *a.generators() : a.members().to_vector();
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool kills = true;
    for (Elem y : as)
      if (r.mul(x, y) != r.zero()) {
        kills = false;
        break;
      }
    if (kills) out.set(x);
  }
  return Ideal(a.ring(), std::move(out));
}

bool is_principal(const Ideal& a) {
  const auto& r = a.r();
  const std::size_t target = a.size();
  bool found = false;
  a.members().for_each([&](Elem x) {
    if (!found && principal_set(r, x).count() == target) found = true;
  });
  return found;
}

bool is_radical(const Ideal& a) { return radical(a) == a; }

bool is_prime(const Ideal& a) {
  if (a.is_unit()) return false;
  const auto& r = a.r();
  for (Elem x = 0; x < r.size(); ++x) {
    if (a.contains(x)) continue;
    for (Elem y = 0; y < r.size(); ++y)
      if (!a.contains(y) && a.contains(r.mul(x, y))) return false;
  }
  return true;
}

bool is_maximal(const Ideal& a) {
  if (a.is_unit()) return false;
  const auto& r = a.r();
  for (Elem x = 0; x < r.size(); ++x) {
    if (a.contains(x)) continue;
    if (subgroup_sum(r, a.members(), principal_set(r, x)).count() != r.size()) return false;
  }
  return true;
}

bool is_primary(const Ideal& a) {
  if (a.is_unit()) return false;
  const auto& r = a.r();
  const Ideal rad = radical(a);
  for (Elem x = 0; x < r.size(); ++x) {
    if (a.contains(x)) continue;
    for (Elem y = 0; y < r.size(); ++y)
      if (!rad.contains(y) && a.contains(r.mul(x, y))) return false;
  }
  return true;
}

bool is_multiplication_ideal(const Ideal& a, const IdealLattice& lattice) {
  for (const auto& j : lattice) {
    if (!j.is_subset_of(a)) continue;
    if (!(ideal_product(a, ideal_colon(j, a)) == j)) return false;
  }
  return true;
}

IdealPredicates ideal_predicates(const Ideal& a, const IdealLattice& lattice) {
  IdealPredicates p;
  p.principal = is_principal(a);
  p.idempotent = ideal_power(a, 2) == a;
  const auto& r = a.r();
  const auto members = a.members().to_vector();
  p.pure = std::all_of(members.begin(), members.end(), [&](Elem x) {
    return std::any_of(members.begin(), members.end(), [&](Elem y) { return r.mul(x, y) == x; });
  });
  p.radical_ideal = is_radical(a);
  p.prime = is_prime(a);
  p.maximal = is_maximal(a);
  p.primary = is_primary(a);
  p.multiplication_ideal = is_multiplication_ideal(a, lattice);
  return p;
}

IdealPredicates ideal_predicates(const Ideal& a) { return ideal_predicates(a, all_ideals(a.ring())); }

Spectrum spectrum(const IdealLattice& lattice) {
  Spectrum s;
  for (const auto& i : lattice) {
    if (is_prime(i)) s.primes.push_back(i);
    if (is_maximal(i)) s.maximals.push_back(i);
  }
  if (s.primes.size() != s.maximals.size() ||
      !std::equal(s.primes.begin(), s.primes.end(), s.maximals.begin()))
    fail(ErrorKind::EngineBug, "a prime ideal of a finite ring is not maximal");
  return s;
}

Spectrum spectrum(const Ring& ring) { return spectrum(all_ideals(ring)); }

}  // namespace avoidance
