#include "avoidance/maps.hpp"

#include <algorithm>
#include <limits>

#include "avoidance/error.hpp"

namespace avoidance {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

std::vector<Elem> generators_of(const Ideal& ideal) {
  if (ideal.generators()) return *ideal.generators();
  return small_generating_set(ideal);
}

// Extends a partial homomorphism by closing under + and *. Returns false on
// a conflicting assignment.
class PartialMap {
 public:
  PartialMap(const FiniteRing& source, const FiniteRing& target)
      : s_(source), t_(target), image_(source.size(), kUnset) {}

  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (image_[a] != kUnset) {
        if (image_[a] != b) return false;
        continue;
      }
      image_[a] = b;
      known_.push_back(a);
      for (std::size_t i = 0; i < known_.size(); ++i) {
        const Elem k = known_[i];
        const Elem ik = image_[k];
        queue.emplace_back(s_.add(a, k), t_.add(b, ik));
        queue.emplace_back(s_.mul(a, k), t_.mul(b, ik));
      }
    }
    return true;
  }

  [[nodiscard]] const std::vector<Elem>& image() const noexcept { return image_; }
  [[nodiscard]] std::size_t known() const noexcept { return known_.size(); }

 private:
  const FiniteRing& s_;
  const FiniteRing& t_;
  std::vector<Elem> image_;
  std::vector<Elem> known_;
};

ElementSet subring_closure(const FiniteRing& r, ElementSet seed) {
  seed.set(r.zero());
  seed.set(r.one());
  std::vector<Elem> members = seed.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem z : {r.add(members[i], members[j]), r.mul(members[i], members[j])}) {
        if (!seed.test(z)) {
          seed.set(z);
          members.push_back(z);
        }
      }
    }
  }
  return seed;
}

}  // namespace

Ideal extend_ideal(const RingMap& phi, const Ideal& ideal) {
  if (ideal.ring() != phi.source()) fail(ErrorKind::RingMismatch, "ideal is not in the source of the map");
  std::vector<Elem> gens;
  for (Elem g : generators_of(ideal)) gens.push_back(phi(g));
  return ideal_generated(phi.target(), gens);
}

Ideal contract_ideal(const RingMap& phi, const Ideal& ideal) {
  if (ideal.ring() != phi.target()) fail(ErrorKind::RingMismatch, "ideal is not in the target of the map");
  ElementSet members(phi.source()->size());
  for (Elem x = 0; x < phi.source()->size(); ++x)
    if (ideal.contains(phi(x))) members.set(x);
  return Ideal(phi.source(), std::move(members));
}

bool is_cyclically_pure(const RingMap& phi, const IdealLattice& source) {
  for (const auto& ideal : source)
    if (!(contract_ideal(phi, extend_ideal(phi, ideal)) == ideal)) return false;
  return true;
}

bool is_cyclically_pure(const RingMap& phi) { return is_cyclically_pure(phi, all_ideals(phi.source())); }

MapPredicates map_predicates(const RingMap& phi, const IdealLattice& source, const IdealLattice& target) {
  MapPredicates out;
  out.surjective = phi.is_surjective();
  out.injective = phi.is_injective();
  out.every_ideal_extended = std::all_of(target.begin(), target.end(), [&](const Ideal& j) {
    return extend_ideal(phi, contract_ideal(phi, j)) == j;
  });
  out.cyclically_pure = is_cyclically_pure(phi, source);
  return out;
}

MapPredicates map_predicates(const RingMap& phi, const Limits& limits) {
  return map_predicates(phi, all_ideals(phi.source(), limits), all_ideals(phi.target(), limits));
}

Subring subring_generated(const Ring& ring, const std::vector<Elem>& generators) {
  const auto& r = *ring;
  ElementSet seed(r.size());
  for (Elem g : generators) {
    if (g >= r.size()) fail(ErrorKind::MalformedDescription, "generator outside the ring");
    seed.set(g);
  }
  const auto members = subring_closure(r, std::move(seed)).to_vector();
  const std::size_t n = members.size();
  std::vector<Elem> local(r.size(), kUnset);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = local[r.add(members[i], members[j])];
      mul[i * n + j] = local[r.mul(members[i], members[j])];
    }
  std::vector<std::string> names;
  names.reserve(n);
  for (Elem m : members) names.push_back(r.name(m));
  // A subring has no recipe of its own; it keeps the ambient description
  // unless it is the whole ring or the prime subring Z/char.
  RingDescription desc = n == r.characteristic() ? desc::zmod(n) : r.desc();
  Ring sub = FiniteRing::from_tables(n, std::move(add), std::move(mul), local[r.zero()], local[r.one()],
                                     std::move(names), std::move(desc));
  return Subring{sub, RingMap(sub, ring, members)};
}

std::vector<RingMap> enumerate_homomorphisms(const Ring& source, const Ring& target, std::size_t limit) {
  std::vector<RingMap> out;
  if (limit == 0) return out;
  const auto& s = *source;
  const auto& t = *target;

  // Greedy ring-generating set: lowest element outside the current subring.
  std::vector<Elem> gens;
  ElementSet current = subring_closure(s, ElementSet(s.size()));
  while (current.count() != s.size()) {
    ElementSet missing = s.all_elements();
    missing.subtract(current);
    const Elem g = missing.first();
    gens.push_back(g);
    current.set(g);
    current = subring_closure(s, std::move(current));
  }

  PartialMap base(s, t);
  if (!base.assign(s.zero(), t.zero()) || !base.assign(s.one(), t.one())) return out;

  // Depth-first over generator images in ascending target order.
  std::vector<PartialMap> stack{base};
  std::vector<Elem> choice(gens.size() + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == gens.size()) {
      const auto& image = stack.back().image();
      if (std::find(image.begin(), image.end(), kUnset) == image.end() && is_homomorphism(s, t, image)) {
        out.emplace_back(source, target, image);
        if (out.size() >= limit) return out;
      }
      if (depth == 0) return out;
      stack.pop_back();
      --depth;
      ++choice[depth];
      continue;
    }
    if (choice[depth] >= t.size()) {
      if (depth == 0) return out;
      choice[depth] = 0;
      stack.pop_back();
      --depth;
      ++choice[depth];
      continue;
    }
    PartialMap next = stack.back();
    if (next.assign(gens[depth], choice[depth])) {
      stack.push_back(std::move(next));
      ++depth;
      choice[depth] = 0;
    } else {
      ++choice[depth];
    }
  }
}

}  // namespace avoidance
