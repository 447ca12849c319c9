#include "avoidance/module.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "cover_search.hpp"

namespace avoidance {

namespace {

std::string strip_brackets(const std::string& s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n') out.push_back(c);
  return out;
}

void adjoin_cyclic(const FiniteModule& m, ElementSet& result, std::vector<Elem>& members, Elem t) {
  if (result.test(t)) return;
  const ElementSet base_set = result;
  const std::vector<Elem> base = members;
  for (Elem c = t; !base_set.test(c); c = m.add(c, t)) {
    for (Elem s : base) {
      const Elem x = m.add(s, c);
      result.set(x);
      members.push_back(x);
    }
  }
}

ElementSet submodule_sum(const FiniteModule& m, const ElementSet& a, const ElementSet& b) {
  if (a.count() < b.count()) return submodule_sum(m, b, a);
  ElementSet result = a;
  std::vector<Elem> members = a.to_vector();
  b.for_each([&](Elem t) { adjoin_cyclic(m, result, members, t); });
  return result;
}

ElementSet cyclic_set(const FiniteModule& m, Elem g) {
  ElementSet s(m.size());
  for (Elem r = 0; r < m.ring()->size(); ++r) s.set(m.act(r, g));
  return s;
}

/// Tuples over `components`, lexicographic with the first component most
/// significant.
std::vector<std::vector<Elem>> tuples(std::size_t base, unsigned rank) {
  std::size_t count = 1;
  for (unsigned i = 0; i < rank; ++i) count *= base;
  std::vector<std::vector<Elem>> out(count, std::vector<Elem>(rank));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t v = idx;
    for (unsigned i = rank; i-- > 0;) {
      out[idx][i] = static_cast<Elem>(v % base);
      v /= base;
    }
  }
  return out;
}

Elem tuple_index(std::size_t base, const std::vector<Elem>& t) {
  std::size_t idx = 0;
  for (Elem e : t) idx = idx * base + e;
  return static_cast<Elem>(idx);
}

std::size_t checked_power(std::size_t base, unsigned rank, const Limits& limits) {
  std::size_t n = 1;
  for (unsigned i = 0; i < rank; ++i) {
    n *= base;
    if (n > limits.max_ring_size)
      fail(ErrorKind::SizeBound, "module exceeds the element bound " + std::to_string(limits.max_ring_size));
  }
  return n;
}

/// Free module of the given rank over `scalars`, with R acting through
/// `through` (an element map R -> scalars).
Module free_over(const Ring& ring, const FiniteRing& scalars, const std::vector<Elem>& through, unsigned rank,
                 ModuleDescription desc, const Limits& limits) {
  const std::size_t q = scalars.size();
  const std::size_t n = checked_power(q, rank, limits);
  const auto elems = tuples(q, rank);
  std::vector<Elem> add(n * n), action(ring->size() * n);
  std::vector<Elem> tmp(rank);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (unsigned i = 0; i < rank; ++i) tmp[i] = scalars.add(elems[a][i], elems[b][i]);
      add[a * n + b] = tuple_index(q, tmp);
    }
  for (std::size_t r = 0; r < ring->size(); ++r)
    for (std::size_t a = 0; a < n; ++a) {
      for (unsigned i = 0; i < rank; ++i) tmp[i] = scalars.mul(through[r], elems[a][i]);
      action[r * n + a] = tuple_index(q, tmp);
    }
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rank == 0) {
      names[a] = "0";
      continue;
    }
    if (rank == 1) {
      names[a] = strip_brackets(scalars.name(elems[a][0]));
      continue;
    }
    std::string s = "(";
    for (unsigned i = 0; i < rank; ++i) {
      if (i > 0) s += ",";
      s += strip_brackets(scalars.name(elems[a][i]));
    }
    names[a] = s + ")";
  }
  const Elem zero = tuple_index(q, std::vector<Elem>(rank, scalars.zero()));
  return FiniteModule::from_tables(ring, n, std::move(add), zero, std::move(action), std::move(names),
                                   std::move(desc));
}

Module module_quotient_by(const Module& m, const ElementSet& sub, ModuleDescription desc) {
  const std::size_t n = m->size();
  std::vector<Elem> coset(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  const auto members = sub.to_vector();
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem s : members) coset[m->add(x, s)] = id;
  }
  const std::size_t k = reps.size();
  const std::size_t rs = m->ring()->size();
  std::vector<Elem> add(k * k), action(rs * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = coset[m->add(reps[a], reps[b])];
  for (std::size_t r = 0; r < rs; ++r)
    for (std::size_t a = 0; a < k; ++a) action[r * k + a] = coset[m->act(static_cast<Elem>(r), reps[a])];
  std::vector<std::string> names(k);
  for (std::size_t a = 0; a < k; ++a) names[a] = "[" + m->name(reps[a]) + "]";
  return FiniteModule::from_tables(m->ring(), k, std::move(add), coset[m->zero()], std::move(action),
                                   std::move(names), std::move(desc));
}

}  // namespace

Module FiniteModule::from_tables(Ring ring, std::size_t size, std::vector<Elem> add, Elem zero,
                                 std::vector<Elem> action, std::vector<std::string> names, ModuleDescription desc) {
  const std::size_t n = size;
  const std::size_t rs = ring->size();
  if (n == 0 || add.size() != n * n || action.size() != rs * n || zero >= n || names.size() != n)
    fail(ErrorKind::MalformedDescription, "module tables have the wrong shape");
  for (Elem e : add)
    if (e >= n) fail(ErrorKind::MalformedDescription, "module addition entry out of range");
  for (Elem e : action)
    if (e >= n) fail(ErrorKind::MalformedDescription, "module action entry out of range");
  auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
  auto act = [&](std::size_t r, std::size_t m) { return action[r * n + m]; };
  const auto& R = *ring;

  std::vector<Elem> neg(n, static_cast<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, zero) != a) fail(ErrorKind::MalformedDescription, "module zero is not an identity");
    if (act(R.one(), a) != a) fail(ErrorKind::MalformedDescription, "1 m != m");
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) fail(ErrorKind::MalformedDescription, "module addition is not commutative");
      if (A(a, b) == zero) neg[a] = static_cast<Elem>(b);
    }
    if (neg[a] == n) fail(ErrorKind::MalformedDescription, "module element without additive inverse");
  }
  if (n * n * n <= (std::size_t{1} << 27)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (A(A(a, b), c) != A(a, A(b, c))) fail(ErrorKind::MalformedDescription, "module addition not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < (std::size_t{1} << 22); ++t) {
      const auto a = rng() % n, b = rng() % n, c = rng() % n;
      if (A(A(a, b), c) != A(a, A(b, c))) fail(ErrorKind::MalformedDescription, "module addition not associative");
    }
  }
  for (Elem r = 0; r < rs; ++r)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (act(r, A(a, b)) != A(act(r, a), act(r, b))) fail(ErrorKind::MalformedDescription, "r(m+m') != rm+rm'");
  for (Elem r = 0; r < rs; ++r)
    for (Elem s = 0; s < rs; ++s)
      for (std::size_t a = 0; a < n; ++a) {
        if (act(R.add(r, s), a) != A(act(r, a), act(s, a))) fail(ErrorKind::MalformedDescription, "(r+s)m != rm+sm");
        if (act(R.mul(r, s), a) != act(r, act(s, a))) fail(ErrorKind::MalformedDescription, "(rs)m != r(sm)");
      }

  std::shared_ptr<FiniteModule> m(new FiniteModule());
  m->ring_ = std::move(ring);
  m->size_ = n;
  m->add_ = std::move(add);
  m->neg_ = std::move(neg);
  m->action_ = std::move(action);
  m->zero_ = zero;
  m->names_ = std::move(names);
  m->desc_ = std::move(desc);
  return m;
}

Elem FiniteModule::parse_element(std::string_view text) const {
  const auto key = strip_spaces(text);
  for (std::size_t i = 0; i < size_; ++i)
    if (strip_spaces(names_[i]) == key) return static_cast<Elem>(i);
  fail(ErrorKind::MalformedDescription, "unknown module element '" + std::string(text) + "'");
}

Module build_module(const Ring& ring, const ModuleDescription& desc, const Limits& limits) {
  return std::visit(
      [&](const auto& node) -> Module {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FreeModule>) {
          std::vector<Elem> id(ring->size());
          for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
          return free_over(ring, *ring, id, node.rank, desc, limits);
        } else if constexpr (std::is_same_v<T, ResiduePower>) {
          std::vector<Elem> gens;
          for (const auto& g : node.maximal) gens.push_back(ring->parse_element(g));
          const Ideal m = ideal_generated(ring, gens);
          if (!is_maximal(m)) fail(ErrorKind::NotMaximal, "residue power needs a maximal ideal");
          const auto q = quotient_ring(m, limits);
          return free_over(ring, *q.ring, q.projection.image(), node.power, desc, limits);
        } else {
          const Module inner = build_module(ring, *node.module, limits);
          std::vector<Elem> gens;
          for (const auto& g : node.generators) gens.push_back(inner->parse_element(g));
          return module_quotient_by(inner, submodule_generated(inner, gens).members(), desc);
        }
      },
      desc.node);
}

Submodule cyclic_submodule(const Module& module, Elem generator) {
  return Submodule(module, cyclic_set(*module, generator));
}

Submodule submodule_generated(const Module& module, const std::vector<Elem>& generators) {
  ElementSet s(module->size());
  s.set(module->zero());
  for (Elem g : generators) {
    if (g >= module->size()) fail(ErrorKind::MalformedDescription, "generator outside the module");
    if (!s.test(g)) s = submodule_sum(*module, s, cyclic_set(*module, g));
  }
  return Submodule(module, std::move(s));
}

Submodule ideal_times_module(const Ideal& ideal, const Module& module) {
  if (ideal.ring() != module->ring()) fail(ErrorKind::RingMismatch, "ideal and module over different rings");
  ElementSet products(module->size());
  ideal.members().for_each([&](Elem r) {
    for (Elem m = 0; m < module->size(); ++m) products.set(module->act(r, m));
  });
  ElementSet result(module->size());
  result.set(module->zero());
  std::vector<Elem> members{module->zero()};
  products.for_each([&](Elem t) { adjoin_cyclic(*module, result, members, t); });
  return Submodule(module, std::move(result));
}

Ideal module_annihilator(const Module& module) {
  const auto& ring = module->ring();
  ElementSet out(ring->size());
  for (Elem r = 0; r < ring->size(); ++r) {
    bool kills = true;
    for (Elem m = 0; m < module->size() && kills; ++m) kills = module->act(r, m) == module->zero();
    if (kills) out.set(r);
  }
  return Ideal(ring, std::move(out));
}

std::vector<Submodule> all_submodules(const Module& module, const Limits& limits) {
  const auto& m = *module;
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::pair<Elem, ElementSet>> cyclics;
  auto insert = [&](ElementSet s) -> bool {
    if (seen.count(s) != 0) return false;
    if (found.size() >= limits.max_ideals)
      fail(ErrorKind::LatticeBound, "more than " + std::to_string(limits.max_ideals) + " submodules");
    seen.emplace(s, found.size());
    found.push_back(std::move(s));
    return true;
  };
  for (Elem x = 0; x < m.size(); ++x) {
    auto c = cyclic_set(m, x);
    if (insert(c)) cyclics.emplace_back(x, std::move(c));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& [x, c] : cyclics) {
      if (found[i].test(x)) continue;
      insert(submodule_sum(m, found[i], c));
    }
  std::sort(found.begin(), found.end());
  std::vector<Submodule> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(module, std::move(s));
  return out;
}

std::optional<ModuleCover> module_min_cover(const Module& module, const std::vector<Submodule>& lattice) {
  const ElementSet whole = ElementSet::full(module->size());
  std::vector<ElementSet> proper;
  for (const auto& s : lattice)
    if (!(s.members() == whole)) proper.push_back(s.members());
  ElementSet reach(module->size());
  for (const auto& p : proper) reach |= p;
  if (!whole.is_subset_of(reach)) return std::nullopt;

  const auto keep = detail::maximal_candidates(proper);
  std::vector<ElementSet> candidates;
  for (auto i : keep) candidates.push_back(proper[i]);
  ModuleCover cover;
  std::optional<std::vector<std::size_t>> chosen;
  if (candidates.size() <= 32) {
    chosen = detail::exact_cover_search(whole, candidates, candidates.size());
  } else {
    chosen = detail::greedy_cover(whole, candidates);
    cover.certified_minimal = false;
  }
  if (!chosen) fail(ErrorKind::EngineBug, "union of maximal proper submodules misses an element");
  for (auto i : *chosen) cover.members.emplace_back(module, candidates[i]);
  cover.size = cover.members.size();
  return cover;
}

ModulePredicates module_predicates(const Module& module, const Limits& limits) {
  ModulePredicates p;
  const auto& m = *module;
  for (Elem x = 0; x < m.size() && !p.cyclic; ++x) p.cyclic = cyclic_set(m, x).count() == m.size();
  p.faithful = module_annihilator(module).is_zero();

  const auto lattice = all_submodules(module, limits);
  const auto cover = module_min_cover(module, lattice);
  p.has_avoidance = !cover.has_value();
  if (cover) p.min_cover_size = cover->size;

  std::unordered_map<ElementSet, bool, ElementSetHash> products;
  for (const auto& i : all_ideals(module->ring(), limits)) products.emplace(ideal_times_module(i, module).members(), true);
  p.multiplication_module = std::all_of(lattice.begin(), lattice.end(),
                                        [&](const Submodule& n) { return products.count(n.members()) != 0; });
  return p;
}

Lemma4Verdict lemma4_check(const Module& module, const std::vector<Ideal>& ideals) {
  if (!module_annihilator(module).is_zero()) fail(ErrorKind::NotFaithful, "module is not faithful");
  ElementSet united(module->size());
  for (const auto& i : ideals) united |= ideal_times_module(i, module).members();
  Lemma4Verdict v;
  v.hypothesis_holds = united.count() == module->size();
  if (!v.hypothesis_holds) return v;
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (ideals[k].is_unit()) {
      v.unit_index = k;
      return v;
    }
  fail(ErrorKind::EngineBug, "faithful module is a union of I_k M with no I_k = R");
}

std::size_t residue_dimension(const Module& module, const Ideal& maximal) {
  const std::size_t q = maximal.r().size() / maximal.size();
  std::size_t quotient = module->size() / ideal_times_module(maximal, module).size();
  std::size_t dim = 0;
  while (quotient > 1) {
    quotient /= q;
    ++dim;
  }
  return dim;
}

std::vector<Submodule> lemma3_cover(const Module& module, const Ideal& maximal, const Limits& limits) {
  if (maximal.ring() != module->ring()) fail(ErrorKind::RingMismatch, "ideal and module over different rings");
  if (!is_maximal(maximal)) fail(ErrorKind::NotMaximal, "lemma3_cover needs a maximal ideal");
  const std::size_t q = maximal.r().size() / maximal.size();
  if (residue_dimension(module, maximal) < 2)
    fail(ErrorKind::DimensionTooSmall, "M/mM must have dimension at least 2 over R/m");
  const std::size_t n = q + 1;

  const auto mM = ideal_times_module(maximal, module);
  const auto lattice = all_submodules(module, limits);
  const ElementSet whole = ElementSet::full(module->size());
  // Preimages of hyperplanes of M/mM.
  std::vector<ElementSet> hyperplanes;
  for (const auto& s : lattice)
    if (mM.is_subset_of(s) && s.size() * q == module->size()) hyperplanes.push_back(s.members());
  auto chosen = detail::exact_cover_search(whole, hyperplanes, n);
  if (!chosen) fail(ErrorKind::EngineBug, "no cover by |R/m|+1 proper submodules found");

  std::vector<Submodule> family;
  for (auto i : *chosen) family.emplace_back(module, hyperplanes[i]);
  for (const auto& s : lattice) {
    if (family.size() >= n) break;
    if (s.members() == whole) continue;
    if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(s);
  }
  if (family.size() != n) fail(ErrorKind::EngineBug, "could not assemble exactly |R/m|+1 proper submodules");
  return family;
}

}  // namespace avoidance
