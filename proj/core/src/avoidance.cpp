#include "avoidance/avoidance.hpp"

#include <algorithm>

#include "avoidance/error.hpp"
#include "avoidance/maps.hpp"
#include "avoidance/structure.hpp"
#include "cover_search.hpp"

namespace avoidance {

namespace {

void check_same_ring(const CoverFamily& family) {
  if (family.members.empty()) fail(ErrorKind::NotACover, "empty cover family");
  for (const auto& m : family.members)
    if (m.ring() != family.target.ring()) fail(ErrorKind::RingMismatch, "cover member in a different ring");
}

void require_cover(const CoverFamily& family) {
  if (!covers(family)) fail(ErrorKind::NotACover, "members do not cover the target");
}

ElementSet union_except(const CoverFamily& family, std::size_t skip) {
  ElementSet u(family.target.r().size());
  for (std::size_t k = 0; k < family.members.size(); ++k)
    if (k != skip) u |= family.members[k].members();
  return u;
}

std::optional<std::size_t> containing_member(const ElementSet& set, const std::vector<Ideal>& members) {
  for (std::size_t k = 0; k < members.size(); ++k)
    if (set.is_subset_of(members[k].members())) return k;
  return std::nullopt;
}

/// Union of the lattice ideals strictly inside ideal i.
ElementSet proper_union(const IdealLattice& lattice, std::size_t i) {
  const auto& target = lattice[i].members();
  ElementSet u(target.universe());
  for (std::size_t k = 0; k < i; ++k)
    if (lattice[k].members().is_subset_of(target)) u |= lattice[k].members();
  return u;
}

}  // namespace

bool covers(const CoverFamily& family) {
  check_same_ring(family);
  return family.target.members().is_subset_of(union_except(family, family.members.size()));
}

bool has_avoidance(const Ideal& ideal, const IdealLattice& lattice) {
  const auto i = lattice.index_of(ideal);
  return !ideal.members().is_subset_of(proper_union(lattice, i));
}

bool has_avoidance(const Ideal& ideal) { return has_avoidance(ideal, all_ideals(ideal.ring())); }

std::optional<MinCover> min_cover(const Ideal& ideal, const IdealLattice& lattice) {
  const auto i = lattice.index_of(ideal);
  if (!ideal.members().is_subset_of(proper_union(lattice, i))) return std::nullopt;

  std::vector<std::size_t> proper;
  std::vector<ElementSet> sets;
  for (std::size_t k = 0; k < i; ++k)
    if (lattice[k].members().is_subset_of(ideal.members())) {
      proper.push_back(k);
      sets.push_back(lattice[k].members());
    }
  const auto keep = detail::maximal_candidates(sets);
  std::vector<ElementSet> candidates;
  for (auto k : keep) candidates.push_back(sets[k]);

  MinCover out{0, CoverFamily{ideal, {}}, true};
  std::optional<std::vector<std::size_t>> chosen;
  if (candidates.size() <= kExhaustiveCoverCandidates) {
    chosen = detail::exact_cover_search(ideal.members(), candidates, candidates.size());
  } else {
    chosen = detail::greedy_cover(ideal.members(), candidates);
    out.certified_minimal = false;
  }
  if (!chosen) fail(ErrorKind::EngineBug, "maximal proper subideals do not cover");
  for (auto c : *chosen) out.family.members.push_back(lattice[proper[keep[c]]]);
  out.size = out.family.members.size();
  return out;
}

std::optional<MinCover> min_cover(const Ideal& ideal) { return min_cover(ideal, all_ideals(ideal.ring())); }

bool is_avoidance_ring(const IdealLattice& lattice) {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].members().is_subset_of(proper_union(lattice, i))) return false;
  return true;
}

bool is_avoidance_ring(const Ring& ring, const Limits& limits) { return is_avoidance_ring(all_ideals(ring, limits)); }

bool is_irredundant(const CoverFamily& family) {
  require_cover(family);
  for (std::size_t k = 0; k < family.members.size(); ++k)
    if (family.target.members().is_subset_of(union_except(family, k))) return false;
  return true;
}

McCoyResult mccoy(const CoverFamily& family) {
  require_cover(family);
  const auto n = family.members.size();
  McCoyResult out;
  out.bound = static_cast<unsigned>(std::max<std::size_t>(n, 2) - 1);

  const std::size_t cap = family.target.r().size() + 1;
  Ideal power = family.target;
  bool found = false;
  for (unsigned d = 1; d <= cap; ++d) {
    if (d > 1) power = ideal_product(power, family.target);
    if (auto k = containing_member(power.members(), family.members)) {
      out.per_member_exponent = d;
      out.per_member_witness = *k;
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorKind::EngineBug, "no power of the target lies in a cover member");

  if (is_irredundant(family)) {
    ElementSet meet = ElementSet::full(family.target.r().size());
    for (const auto& m : family.members) meet &= m.members();
    power = family.target;
    for (unsigned d = 1; d <= cap; ++d) {
      if (d > 1) {
        Ideal next = ideal_product(power, family.target);
        if (next == power) break;
        power = std::move(next);
      }
      if (power.members().is_subset_of(meet)) {
        out.intersection_exponent = d;
        break;
      }
    }
    if (!out.intersection_exponent || *out.intersection_exponent > out.bound)
      fail(ErrorKind::BoundViolation, "irredundant cover of size " + std::to_string(n) +
                                          " needs intersection exponent above " + std::to_string(out.bound));
  }
  return out;
}

std::size_t radical_variant_check(const CoverFamily& family) {
  require_cover(family);
  const auto non_radical = std::count_if(family.members.begin(), family.members.end(),
                                         [](const Ideal& m) { return !is_radical(m); });
  if (non_radical > 2)
    fail(ErrorKind::HypothesisFailed, std::to_string(non_radical) + " non-radical members (at most 2 allowed)");
  if (auto k = containing_member(family.target.members(), family.members)) return *k;
  fail(ErrorKind::EngineBug, "no member contains the target despite the radical hypothesis");
}

std::optional<MapAvoidanceWitness> map_avoidance_witness(const RingMap& phi, const IdealLattice& source) {
  if (source.ring() != phi.source()) fail(ErrorKind::RingMismatch, "lattice is not of the map's source");
  std::vector<ElementSet> ext;
  ext.reserve(source.size());
  for (const auto& ideal : source) ext.push_back(extend_ideal(phi, ideal).members());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& target = source[i].members();
    ElementSet u(target.universe());
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k < i; ++k) {
      if (!source[k].members().is_subset_of(target) || ext[i].is_subset_of(ext[k])) continue;
      u |= source[k].members();
      bad.push_back(k);
    }
    if (target.is_subset_of(u)) {
      MapAvoidanceWitness w{source[i], {}};
      for (auto k : bad) w.bad_subideals.push_back(source[k]);
      return w;
    }
  }
  return std::nullopt;
}

bool map_has_avoidance(const RingMap& phi, const IdealLattice& source) {
  return !map_avoidance_witness(phi, source).has_value();
}

bool map_has_avoidance(const RingMap& phi, const Limits& limits) {
  return map_has_avoidance(phi, all_ideals(phi.source(), limits));
}

PrimaryAvoidance primary_avoidance_equiv(const IdealLattice& lattice) {
  PrimaryAvoidance out;
  out.avoidance = is_avoidance_ring(lattice);
  std::vector<const Ideal*> primaries;
  for (const auto& ideal : lattice)
    if (is_primary(ideal)) primaries.push_back(&ideal);
  out.primary_avoidance = true;
  for (const auto& ideal : lattice) {
    ElementSet u(ideal.members().universe());
    for (const Ideal* p : primaries)
      if (!ideal.is_subset_of(*p)) u |= p->members();
    if (ideal.members().is_subset_of(u)) {
      out.primary_avoidance = false;
      break;
    }
  }
  if (out.avoidance != out.primary_avoidance)
    fail(ErrorKind::EngineBug, "avoidance and primary avoidance disagree");
  return out;
}

PrimaryAvoidance primary_avoidance_equiv(const Ring& ring, const Limits& limits) {
  return primary_avoidance_equiv(all_ideals(ring, limits));
}

ConjectureReport conjecture_probe(const Ring& target, const std::vector<ProbeSource>& sources, const Limits& limits) {
  ConjectureReport report;
  report.target = to_string(target->desc());
  const auto decomposition = local_decomposition(target, limits);
  report.right_side = std::all_of(decomposition.factors.begin(), decomposition.factors.end(),
                                  [](const LocalFactor& f) { return f.ring->is_field(); });
  for (const auto& source : sources) {
    if (source.map.target() != target) fail(ErrorKind::RingMismatch, "probe map '" + source.label + "' misses the target");
    ++report.maps_checked;
    if (!map_has_avoidance(source.map, limits)) report.failing_maps.push_back(source.label);
  }
  report.sampled_left_side = report.failing_maps.empty();
  report.low_confidence = sources.empty();
  report.sides_agree = report.right_side == report.sampled_left_side;
  return report;
}

}  // namespace avoidance
