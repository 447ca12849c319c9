#include <gtest/gtest.h>

#include "avoidance/avoidance.hpp"
#include "avoidance/error.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/maps.hpp"
#include "avoidance/module.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace avoidance;
using fixtures::ideal;

Module free_over(const Ring& r, unsigned rank) { return build_module(r, desc::free_module(rank)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::EngineBug;
}

TEST(BuildModule, Examples) {
  EXPECT_EQ(free_over(fixtures::gf(2), 2)->size(), 4U);
  EXPECT_EQ(free_over(fixtures::gf(2), 0)->size(), 1U);

  const Ring z12 = fixtures::zmod(12);
  const Module m = build_module(z12, desc::residue_power({"2"}, 2));
  ASSERT_EQ(m->size(), 4U);
  // The action factors through Z/12 -> Z/2.
  for (Elem r = 0; r < z12->size(); ++r)
    for (Elem v = 0; v < m->size(); ++v) {
      const Elem parity = z12->from_integer(std::stoll(z12->name(r)) % 2);
      EXPECT_EQ(m->act(r, v), m->act(parity, v));
    }
  EXPECT_EQ(kind_of([&] { (void)build_module(z12, desc::residue_power({"4"}, 1)); }), ErrorKind::NotMaximal);
}

TEST(Submodules, Counts) {
  EXPECT_EQ(all_submodules(free_over(fixtures::gf(2), 2)).size(), 5U);
  EXPECT_EQ(all_submodules(free_over(fixtures::gf(3), 2)).size(), 6U);
  const Ring z12 = fixtures::zmod(12);
  const auto subs = all_submodules(free_over(z12, 1));
  const auto lattice = all_ideals(z12);
  ASSERT_EQ(subs.size(), lattice.size());
  for (const auto& s : subs) EXPECT_TRUE(lattice.index_of(s.members()).has_value());
}

TEST(ModulePredicates, FieldPlane) {
  const auto p = module_predicates(free_over(fixtures::gf(2), 2));
  EXPECT_FALSE(p.cyclic);
  EXPECT_TRUE(p.faithful);
  EXPECT_FALSE(p.has_avoidance);
  EXPECT_FALSE(p.multiplication_module);
  ASSERT_TRUE(p.min_cover_size.has_value());
  EXPECT_EQ(*p.min_cover_size, 3U);
}

TEST(ModulePredicates, RingOverItself) {
  for (const Ring& r : {fixtures::zmod(12), build_ring(desc::poly_quotient(desc::gf(2), {"x"}, 3))}) {
    const auto p = module_predicates(free_over(r, 1));
    EXPECT_TRUE(p.cyclic);
    EXPECT_TRUE(p.has_avoidance);
    EXPECT_FALSE(p.min_cover_size.has_value());
  }
}

TEST(ModuleMinCover, FieldPlanesGiveQPlusOne) {
  const std::vector<std::pair<Ring, std::size_t>> cases = {
      {fixtures::gf(2), 3}, {fixtures::gf(3), 4}, {fixtures::gf(2, 2), 5}};
  for (const auto& [k, expected] : cases) {
    const Module m = free_over(k, 2);
    const auto cover = module_min_cover(m, all_submodules(m));
    ASSERT_TRUE(cover.has_value());
    EXPECT_EQ(cover->size, expected);
    EXPECT_TRUE(cover->certified_minimal);
  }
}

TEST(Lemma4, Examples) {
  const Ring z12 = fixtures::zmod(12);
  const Module m = free_over(z12, 1);
  const auto v = lemma4_check(m, {ideal(z12, "1"), ideal(z12, "2")});
  EXPECT_TRUE(v.hypothesis_holds);
  ASSERT_TRUE(v.unit_index.has_value());
  EXPECT_EQ(*v.unit_index, 0U);
  EXPECT_FALSE(lemma4_check(m, {ideal(z12, "2"), ideal(z12, "3")}).hypothesis_holds);

  const Ring f2 = fixtures::gf(2);
  const Module plane = free_over(f2, 2);
  for (const auto& fam : std::vector<std::vector<Ideal>>{{ideal(f2, ""), ideal(f2, "1")}, {ideal(f2, "1")}}) {
    const auto w = lemma4_check(plane, fam);
    EXPECT_TRUE(w.hypothesis_holds);
    ASSERT_TRUE(w.unit_index.has_value());
    EXPECT_TRUE(fam[*w.unit_index].is_unit());
  }
  EXPECT_EQ(kind_of([&] { (void)lemma4_check(build_module(z12, desc::residue_power({"2"}, 1)), {ideal(z12, "1")}); }),
            ErrorKind::NotFaithful);
}

TEST(Lemma3, Lines) {
  for (const auto& [k, lines] : std::vector<std::pair<Ring, std::size_t>>{
           {fixtures::gf(2), 3}, {fixtures::gf(3), 4}, {fixtures::gf(2, 2), 5}}) {
    const Module m = free_over(k, 2);
    const auto cover = lemma3_cover(m, ideal(k, ""));
    ASSERT_EQ(cover.size(), lines);
    ElementSet u(m->size());
    for (const auto& s : cover) {
      EXPECT_LT(s.size(), m->size());
      u |= s.members();
    }
    EXPECT_EQ(u.count(), m->size());
  }
  const Ring f2 = fixtures::gf(2);
  EXPECT_EQ(kind_of([&] { (void)lemma3_cover(free_over(f2, 1), ideal(f2, "")); }), ErrorKind::DimensionTooSmall);
}

TEST(Lemma3, OverLocalRings) {
  // Over F2[x]/(x^2) the free module of rank 2 has residue dimension 2.
  const Ring dual = build_ring(desc::poly_quotient(desc::gf(2), {"x"}, 2));
  const Module m = free_over(dual, 2);
  const Ideal maximal = ideal(dual, "x");
  EXPECT_EQ(residue_dimension(m, maximal), 2U);
  const auto cover = lemma3_cover(m, maximal);
  EXPECT_EQ(cover.size(), 3U);
  ElementSet u(m->size());
  for (const auto& s : cover) u |= s.members();
  EXPECT_EQ(u.count(), m->size());
}

// Oracles and properties over the corpus modules.

std::vector<Module> corpus_modules() {
  std::vector<Module> out;
  for (const auto& spec : harness::generate_corpus(77, {.max_ring_size = 64, .count = 30}).modules)
    out.push_back(build_module(build_ring(spec.ring), spec.module));
  return out;
}

TEST(ModuleOracle, SubmodulesMatchSubgroupFiltering) {
  for (const Module& m : corpus_modules()) {
    auto expected = oracle::submodules(m);
    std::vector<ElementSet> got;
    for (const auto& s : all_submodules(m)) got.push_back(s.members());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << to_string(m->desc());
  }
}

TEST(ModuleOracle, AvoidanceIffCyclic) {
  for (const Module& m : corpus_modules()) {
    const auto p = module_predicates(m);
    EXPECT_EQ(p.cyclic, oracle::module_is_cyclic(m));
    EXPECT_EQ(p.has_avoidance, oracle::module_has_avoidance(m));
    EXPECT_EQ(p.has_avoidance, p.cyclic);
    if (p.faithful && p.multiplication_module) EXPECT_TRUE(p.has_avoidance);
  }
}

TEST(ModuleProperties, IdealizationBridge) {
  for (const Module& m : corpus_modules()) {
    const auto n = idealization(m);
    EXPECT_EQ(has_avoidance(n.module_ideal), module_predicates(m).has_avoidance) << to_string(m->desc());
    EXPECT_TRUE(is_cyclically_pure(n.inclusion));
  }
}

TEST(ModuleProperties, Lemma3CoversHaveResidueSizePlusOne) {
  for (const Module& m : corpus_modules())
    for (const auto& maximal : spectrum(m->ring()).maximals) {
      if (residue_dimension(m, maximal) < 2) continue;
      const auto cover = lemma3_cover(m, maximal);
      EXPECT_EQ(cover.size(), m->ring()->size() / maximal.size() + 1);
      ElementSet u(m->size());
      for (const auto& s : cover) {
        EXPECT_LT(s.size(), m->size());
        u |= s.members();
      }
      EXPECT_EQ(u.count(), m->size());
    }
}

}  // namespace
