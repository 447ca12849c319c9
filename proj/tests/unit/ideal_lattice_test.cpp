#include <gtest/gtest.h>

#include "avoidance/error.hpp"
#include "avoidance/serialize.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace avoidance;
using fixtures::ideal;
using Names = std::vector<std::string>;

TEST(IdealGenerated, Examples) {
  const Ring plane = fixtures::plane(2);
  const Ideal m = ideal(plane, "x,y");
  EXPECT_EQ(fixtures::names(plane, m.members()), (Names{"0", "x", "x+y", "y"}));
  EXPECT_TRUE(ideal(plane, "").is_zero());

  const Ring z12 = fixtures::zmod(12);
  const Ideal eight = ideal(z12, "8");
  EXPECT_EQ(fixtures::names(z12, eight.members()), (Names{"0", "4", "8"}));
  EXPECT_EQ(eight.members(), ideal(z12, "4").members());
}

TEST(AllIdeals, Examples) {
  const Ring z12 = fixtures::zmod(12);
  const auto lattice = all_ideals(z12);
  ASSERT_EQ(lattice.size(), 6U);
  for (const char* g : {"1", "2", "3", "4", "6", "0"})
    EXPECT_TRUE(lattice.index_of(ideal(z12, g).members()).has_value()) << g;

  const Ring plane = fixtures::plane(2);
  const auto pl = all_ideals(plane);
  ASSERT_EQ(pl.size(), 6U);
  for (const char* g : {"", "x", "y", "x+y", "x,y", "1"})
    EXPECT_TRUE(pl.index_of(ideal(plane, g).members()).has_value()) << g;

  for (const Ring& f : {fixtures::gf(2), fixtures::gf(7), fixtures::gf(2, 3), fixtures::gf(3, 2)})
    EXPECT_EQ(all_ideals(f).size(), 2U);
}

TEST(AllIdeals, CanonicalOrder) {
  const auto lattice = all_ideals(fixtures::zmod(12));
  for (std::size_t i = 1; i < lattice.size(); ++i) EXPECT_LE(lattice[i - 1].size(), lattice[i].size());
  EXPECT_TRUE(lattice[0].is_zero());
  EXPECT_TRUE(lattice[lattice.size() - 1].is_unit());
}

TEST(IdealCombine, Examples) {
  const Ring z12 = fixtures::zmod(12);
  EXPECT_EQ(ideal_sum(ideal(z12, "4"), ideal(z12, "6")).members(), ideal(z12, "2").members());
  const Ring plane = fixtures::plane(2);
  const Ideal m = ideal(plane, "x,y");
  EXPECT_EQ(ideal_colon(ideal(plane, "x"), m).members(), m.members());
  for (const Ring& r : fixtures::small_rings()) {
    const Ideal unit = ideal(r, "1");
    for (const auto& a : all_ideals(r)) EXPECT_EQ(ideal_product(a, unit).members(), a.members());
  }
}

TEST(IdealPower, Examples) {
  const Ring plane = fixtures::plane(2);
  const Ideal m = ideal(plane, "x,y");
  EXPECT_TRUE(ideal_power(m, 2).is_zero());
  EXPECT_EQ(ideal_power(m, 1).members(), m.members());
  const Ring z12 = fixtures::zmod(12);
  EXPECT_EQ(ideal_power(ideal(z12, "2"), 3).members(), ideal(z12, "4").members());
}

TEST(Radical, Examples) {
  const Ring z12 = fixtures::zmod(12);
  EXPECT_EQ(radical(ideal(z12, "4")).members(), ideal(z12, "2").members());
  EXPECT_TRUE(radical(ideal(z12, "1")).is_unit());
  const Ring plane = fixtures::plane(2);
  EXPECT_EQ(radical(ideal(plane, "")).members(), ideal(plane, "x,y").members());
}

TEST(Annihilator, Examples) {
  const Ring plane = fixtures::plane(2);
  EXPECT_EQ(annihilator(ideal(plane, "x")).members(), ideal(plane, "x,y").members());
  EXPECT_TRUE(annihilator(ideal(plane, "")).is_unit());
  const Ring z12 = fixtures::zmod(12);
  EXPECT_EQ(annihilator(ideal(z12, "4")).members(), ideal(z12, "3").members());
}

TEST(IdealPredicates, Examples) {
  const Ring z6 = fixtures::zmod(6);
  const auto p = ideal_predicates(ideal(z6, "3"));
  EXPECT_TRUE(p.idempotent);
  EXPECT_TRUE(p.pure);

  const Ring plane = fixtures::plane(2);
  const auto m = ideal_predicates(ideal(plane, "x,y"));
  EXPECT_FALSE(m.principal);
  EXPECT_FALSE(m.idempotent);
  EXPECT_FALSE(m.multiplication_ideal);
  EXPECT_TRUE(m.maximal);
  EXPECT_TRUE(m.prime);
}

TEST(IdealPredicates, MaximalImpliesPrime) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r))
      if (is_maximal(i)) EXPECT_TRUE(is_prime(i));
}

TEST(Spectrum, Examples) {
  const auto z12 = spectrum(fixtures::zmod(12));
  ASSERT_EQ(z12.maximals.size(), 2U);
  EXPECT_EQ(z12.maximals[0].size() + z12.maximals[1].size(), 6U + 4U);
  const auto field = spectrum(fixtures::gf(5));
  ASSERT_EQ(field.maximals.size(), 1U);
  EXPECT_TRUE(field.maximals[0].is_zero());
  const Ring plane = fixtures::plane(2);
  const auto s = spectrum(plane);
  ASSERT_EQ(s.maximals.size(), 1U);
  EXPECT_EQ(s.maximals[0].members(), ideal(plane, "x,y").members());
}

TEST(Serialize, SortedNamesAndCovers) {
  const Ring plane = fixtures::plane(2);
  EXPECT_EQ(to_json(ideal(plane, "x,y")), nlohmann::json({"0", "x", "x+y", "y"}));
  const auto j = to_json(all_ideals(plane));
  EXPECT_EQ(j["ideals"].size(), 6U);
  EXPECT_EQ(j["covers"][0], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(j["covers"][5], nlohmann::json::array());
}

// Oracle comparisons and properties over the small corpus.

TEST(LatticeOracle, AllIdealsMatchesSubgroupFiltering) {
  for (const Ring& r : fixtures::small_rings()) {
    auto expected = oracle::ideals(r);
    std::vector<ElementSet> got;
    for (const auto& i : all_ideals(r)) got.push_back(i.members());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << to_string(r->desc());
  }
}

TEST(LatticeOracle, PrincipalMatchesDefinition) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r)) EXPECT_EQ(is_principal(i), oracle::is_principal(r, i.members()));
}

TEST(LatticeOracle, MultiplicationIdealMatchesExhaustiveSearch) {
  for (const Ring& r : fixtures::small_rings()) {
    const auto lattice = all_ideals(r);
    if (lattice.size() > 40) continue;
    std::vector<ElementSet> sets;
    for (const auto& i : lattice) sets.push_back(i.members());
    for (const auto& i : lattice)
      EXPECT_EQ(is_multiplication_ideal(i, lattice), oracle::is_multiplication_ideal(r, i.members(), sets))
          << to_string(r->desc()) << " " << ideal_label(i);
  }
}

TEST(LatticeProperties, GenerationIsClosedAndIdempotent) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r)) {
      EXPECT_TRUE(is_ideal(*r, i.members()));
      EXPECT_EQ(ideal_generated(r, i.members().to_vector()).members(), i.members());
      EXPECT_EQ(ideal_generated(r, small_generating_set(i)).members(), i.members());
      EXPECT_EQ(oracle::generated(r, small_generating_set(i)), i.members());
    }
}

TEST(LatticeProperties, PureImpliesIdempotent) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r)) {
      const auto p = ideal_predicates(i);
      if (p.pure) EXPECT_TRUE(p.idempotent);
    }
}

TEST(LatticeProperties, IdempotentIdealsHaveIdempotentGenerators) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r)) {
      if (!(ideal_product(i, i) == i)) continue;
      bool found = false;
      i.members().for_each([&](Elem e) {
        if (r->mul(e, e) == e && oracle::principal(r, e) == i.members()) found = true;
      });
      EXPECT_TRUE(found) << ideal_label(i);
    }
}

TEST(LatticeProperties, RadicalOfPowers) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r))
      for (unsigned d = 1; d <= 4; ++d) EXPECT_EQ(radical(ideal_power(i, d)).members(), radical(i).members());
}

TEST(LatticeProperties, PrimaryRadicalIsPrime) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r))
      if (is_primary(i)) EXPECT_TRUE(is_prime(radical(i)));
}

TEST(LatticeProperties, RadicalMatchesNilpotentDefinition) {
  for (const Ring& r : fixtures::small_rings())
    for (const auto& i : all_ideals(r)) {
      ElementSet expected(r->size());
      for (Elem a = 0; a < r->size(); ++a) {
        Elem p = a;
        for (std::size_t e = 1; e <= r->size() && !i.contains(p); ++e) p = r->mul(p, a);
        if (i.contains(p)) expected.set(a);
      }
      EXPECT_EQ(radical(i).members(), expected);
    }
}

TEST(LatticeLimits, IdealBound) {
  Limits tight;
  tight.max_ideals = 3;
  try {
    (void)all_ideals(fixtures::zmod(12), tight);
    FAIL() << "expected LatticeBound";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeBound);
  }
}

}  // namespace
