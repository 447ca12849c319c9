#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

namespace {

ElementSet close_under_addition(const std::function<Elem(Elem, Elem)>& add, ElementSet s) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto members = s.to_vector();
    for (Elem a : members)
      for (Elem b : members) {
        const Elem c = add(a, b);
        if (!s.test(c)) {
          s.set(c);
          changed = true;
        }
      }
  }
  return s;
}

std::vector<ElementSet> subgroups(std::size_t n, Elem zero, const std::function<Elem(Elem, Elem)>& add) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier;
  ElementSet trivial(n);
  trivial.set(zero);
  seen.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& s : frontier)
      for (Elem x = 0; x < n; ++x) {
        if (s.test(x)) continue;
        ElementSet t = s;
        t.set(x);
        t = close_under_addition(add, t);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<ElementSet> additive_subgroups(const Ring& ring) {
  return subgroups(ring->size(), ring->zero(), [&](Elem a, Elem b) { return ring->add(a, b); });
}

std::vector<ElementSet> ideals(const Ring& ring) {
  std::vector<ElementSet> out;
  for (const auto& s : additive_subgroups(ring)) {
    bool closed = true;
    s.for_each([&](Elem a) {
      for (Elem r = 0; r < ring->size() && closed; ++r) closed = s.test(ring->mul(r, a));
    });
    if (closed) out.push_back(s);
  }
  return out;
}

ElementSet principal(const Ring& ring, Elem x) {
  ElementSet s(ring->size());
  for (Elem r = 0; r < ring->size(); ++r) s.set(ring->mul(r, x));
  return s;
}

ElementSet generated(const Ring& ring, const std::vector<Elem>& generators) {
  // R g is an additive subgroup, so the ideal is the sum of these subgroups.
  ElementSet acc(ring->size());
  acc.set(ring->zero());
  for (Elem g : generators) {
    const auto p = principal(ring, g).to_vector();
    ElementSet next(ring->size());
    acc.for_each([&](Elem a) {
      for (Elem b : p) next.set(ring->add(a, b));
    });
    acc = std::move(next);
  }
  return acc;
}

bool is_principal(const Ring& ring, const ElementSet& ideal) {
  for (Elem x = 0; x < ring->size(); ++x)
    if (ideal.test(x) && principal(ring, x) == ideal) return true;
  return false;
}

bool covers(const ElementSet& target, const std::vector<ElementSet>& family) {
  ElementSet u(target.universe());
  for (const auto& f : family) u |= f;
  return target.is_subset_of(u);
}

bool has_avoidance(const ElementSet& target, const std::vector<ElementSet>& lattice) {
  std::vector<ElementSet> candidates;
  for (const auto& i : lattice)
    if (!target.is_subset_of(i)) candidates.push_back(i);
  // Families without a member containing the target are subsets of the
  // candidates; unions only grow, so the full candidate set is the hardest
  // case, but we enumerate every subset anyway to stay definitional.
  const std::size_t n = candidates.size();
  if (n > 20) return !covers(target, candidates);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ElementSet> family;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1U) family.push_back(candidates[k]);
    if (covers(target, family)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> min_cover(const ElementSet& target, const std::vector<ElementSet>& lattice) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!target.is_subset_of(lattice[i])) candidates.push_back(i);
  const std::size_t n = candidates.size();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) -> bool {
    if (left == 0) {
      std::vector<ElementSet> family;
      for (auto k : pick) family.push_back(lattice[k]);
      return covers(target, family);
    }
    for (std::size_t k = from; k + left <= n; ++k) {
      pick.push_back(candidates[k]);
      if (choose(k + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= n; ++size)
    if (choose(0, size)) return pick;
  return std::nullopt;
}

bool is_multiplication_ideal(const Ring& ring, const ElementSet& a, const std::vector<ElementSet>& lattice) {
  auto product = [&](const ElementSet& x, const ElementSet& y) {
    std::vector<Elem> gens;
    x.for_each([&](Elem p) { y.for_each([&](Elem q) { gens.push_back(ring->mul(p, q)); }); });
    return generated(ring, gens);
  };
  for (const auto& j : lattice) {
    if (!j.is_subset_of(a)) continue;
    const bool found = std::any_of(lattice.begin(), lattice.end(), [&](const ElementSet& k) { return product(a, k) == j; });
    if (!found) return false;
  }
  return true;
}

std::optional<std::size_t> min_generating_set_size(const Ring& ring, const ElementSet& target, std::size_t max_size) {
  const auto members = target.to_vector();
  std::vector<Elem> pick;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) -> bool {
    if (left == 0) return generated(ring, pick) == target;
    for (std::size_t k = from; k + left <= members.size(); ++k) {
      pick.push_back(members[k]);
      if (choose(k + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= max_size; ++size)
    if (choose(0, size)) return size;
  return std::nullopt;
}

std::vector<ElementSet> submodules(const Module& module) {
  std::vector<ElementSet> out;
  for (const auto& s : subgroups(module->size(), module->zero(), [&](Elem a, Elem b) { return module->add(a, b); })) {
    bool closed = true;
    s.for_each([&](Elem m) {
      for (Elem r = 0; r < module->ring()->size() && closed; ++r) closed = s.test(module->act(r, m));
    });
    if (closed) out.push_back(s);
  }
  return out;
}

bool module_is_cyclic(const Module& module) {
  for (Elem m = 0; m < module->size(); ++m) {
    ElementSet s(module->size());
    for (Elem r = 0; r < module->ring()->size(); ++r) s.set(module->act(r, m));
    if (s.count() == module->size()) return true;
  }
  return false;
}

bool module_has_avoidance(const Module& module) {
  return has_avoidance(ElementSet::full(module->size()), submodules(module));
}

bool satisfies_ring_axioms(const Ring& ring) {
  const auto& r = *ring;
  const Elem n = static_cast<Elem>(r.size());
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.mul(a, r.one()) != a || r.add(a, r.neg(a)) != r.zero()) return false;
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a)) return false;
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return false;
      }
    }
  }
  return r.one() != r.zero();
}

bool isomorphic(const Ring& a, const Ring& b) {
  const std::size_t n = a->size();
  if (n != b->size()) return false;
  std::vector<Elem> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(Elem)> extend = [&](Elem x) -> bool {
    if (x == n) {
      for (Elem p = 0; p < n; ++p)
        for (Elem q = 0; q < n; ++q)
          if (image[a->add(p, q)] != b->add(image[p], image[q]) || image[a->mul(p, q)] != b->mul(image[p], image[q]))
            return false;
      return true;
    }
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      // Partial consistency with earlier assignments prunes hard.
      bool ok = true;
      image[x] = y;
      for (Elem p = 0; p <= x && ok; ++p) {
        const Elem s = a->add(p, x), m = a->mul(p, x);
        if (s <= x && image[s] != b->add(image[p], y)) ok = false;
        if (m <= x && image[m] != b->mul(image[p], y)) ok = false;
      }
      if (!ok) continue;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

bool z_cover_by_residues(std::uint64_t ideal, const std::vector<std::uint64_t>& family, std::uint64_t horizon) {
  for (std::uint64_t j = 1; j <= horizon; ++j) {
    const std::uint64_t m = j * ideal;
    if (std::none_of(family.begin(), family.end(), [&](std::uint64_t g) { return m % g == 0; })) return false;
  }
  return true;
}

}  // namespace oracle
