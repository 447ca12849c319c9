#include <gtest/gtest.h>

#include "avoidance/avoidance.hpp"
#include "avoidance/error.hpp"
#include "avoidance/graded.hpp"
#include "avoidance/linalg.hpp"
#include "avoidance/structure.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace avoidance;
using fixtures::ideal;

GradedAlgebra graded(std::uint64_t p, std::vector<GradedVar> vars, unsigned k, std::vector<std::string> rel = {}) {
  return build_graded(std::get<Graded>(desc::graded(desc::gf(p), std::move(vars), k, std::move(rel)).node));
}

std::vector<std::string> gen_names(const GradedAlgebra& g) {
  std::vector<std::string> out;
  for (Elem e : minimal_generators(g)) out.push_back(g.ring->name(e));
  return out;
}

TEST(LocalDecomposition, Z12) {
  const Ring z12 = fixtures::zmod(12);
  const auto dec = local_decomposition(z12);
  ASSERT_EQ(dec.factors.size(), 2U);
  std::map<std::string, std::pair<std::string, Ring>> by_max;
  for (const auto& f : dec.factors) by_max[ideal_label(f.maximal)] = {ideal_label(f.stable_power), f.ring};
  ASSERT_TRUE(by_max.count("(2)") && by_max.count("(3)"));
  EXPECT_EQ(by_max["(2)"].first, "(4)");
  EXPECT_TRUE(oracle::isomorphic(by_max["(2)"].second, fixtures::zmod(4)));
  EXPECT_EQ(by_max["(3)"].first, "(3)");
  EXPECT_TRUE(oracle::isomorphic(by_max["(3)"].second, fixtures::zmod(3)));
}

TEST(LocalDecomposition, FieldsAndProducts) {
  const Ring f = fixtures::gf(2, 2);
  const auto single = local_decomposition(f);
  ASSERT_EQ(single.factors.size(), 1U);
  EXPECT_TRUE(oracle::isomorphic(single.factors[0].ring, f));

  const Ring cube = build_ring(desc::product({desc::gf(2), desc::gf(2), desc::gf(2)}));
  const auto three = local_decomposition(cube);
  ASSERT_EQ(three.factors.size(), 3U);
  for (const auto& factor : three.factors) EXPECT_TRUE(oracle::isomorphic(factor.ring, fixtures::gf(2)));
}

TEST(RingPredicates, Examples) {
  const auto z8 = ring_predicates(fixtures::zmod(8));
  EXPECT_TRUE(z8.local);
  EXPECT_TRUE(z8.pir);
  EXPECT_TRUE(z8.chain_ring);
  EXPECT_FALSE(z8.absolutely_flat);
  const auto plane = ring_predicates(fixtures::plane(2));
  EXPECT_TRUE(plane.local);
  EXPECT_FALSE(plane.pir);
  EXPECT_FALSE(plane.bezout);
  const auto f6 = ring_predicates(build_ring(desc::product({desc::gf(2), desc::gf(3)})));
  EXPECT_TRUE(f6.absolutely_flat);
  EXPECT_FALSE(f6.local);
}

TEST(LocalCriterion, Examples) {
  const auto z = theorem6_check(fixtures::zmod(12));
  EXPECT_TRUE(z.via_definition && z.via_local_criterion);
  const auto p = theorem6_check(fixtures::plane(2));
  EXPECT_FALSE(p.via_definition || p.via_local_criterion);
  const auto q = theorem6_check(build_ring(desc::product({fixtures::plane_desc(2), desc::zmod(3)})));
  EXPECT_FALSE(q.via_definition || q.via_local_criterion);
}

TEST(StructureProperties, OnCorpus) {
  for (const Ring& r : fixtures::small_rings()) {
    const auto dec = local_decomposition(r);
    const auto back = reassemble(dec);
    EXPECT_TRUE(back.combined.is_injective() && back.combined.is_surjective());
    EXPECT_TRUE(oracle::isomorphic(back.product, r) || r->size() > 16);
    for (const auto& f : dec.factors) EXPECT_TRUE(ring_predicates(f.ring).local);

    const auto t = theorem6_check(r);
    EXPECT_EQ(t.via_definition, t.via_local_criterion);
    const auto p = ring_predicates(r);
    EXPECT_EQ(p.bezout, p.pir);
    EXPECT_EQ(p.pir, is_avoidance_ring(r));
    if (p.absolutely_flat) {
      for (const auto& i : all_ideals(r)) EXPECT_TRUE(is_radical(i));
      EXPECT_TRUE(is_avoidance_ring(r));
    }
    if (p.chain_ring) EXPECT_TRUE(is_avoidance_ring(r));
  }
}

TEST(BuildGraded, Examples) {
  const auto plane = graded(2, {{"x", 1}, {"y", 1}}, 2);
  EXPECT_EQ(plane.dim(), 3U);
  EXPECT_EQ(plane.ring->size(), 8U);
  EXPECT_TRUE(oracle::isomorphic(plane.ring, fixtures::plane(2)));

  const auto cubic = graded(2, {{"x", 1}}, 3);
  EXPECT_TRUE(oracle::isomorphic(cubic.ring, build_ring(desc::poly_quotient(desc::gf(2), {"x"}, 3))));

  const auto g = graded(3, {{"x", 1}, {"y", 1}}, 3, {"x*y"});
  EXPECT_EQ(g.dim(), 5U);
  EXPECT_EQ(g.ring->size(), 243U);
}

TEST(BuildGraded, Errors) {
  auto kind = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::EngineBug;
  };
  EXPECT_EQ(kind([] { (void)graded(2, {{"x", 1}}, 3, {"x"}); }), ErrorKind::LinearRelation);
  EXPECT_EQ(kind([] { (void)graded(2, {{"x", 1}, {"y", 2}}, 4, {"x^2 + x*y"}); }),
            ErrorKind::NonHomogeneousRelation);
  EXPECT_EQ(kind([] { (void)graded(2, {{"x", 1}}, 3, {"z^2"}); }), ErrorKind::MalformedDescription);
  EXPECT_EQ(kind([] { (void)build_graded(std::get<Graded>(desc::graded(desc::zmod(4), {{"x", 1}}, 2).node)); }),
            ErrorKind::NotAField);
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(gen_names(graded(2, {{"x", 1}, {"y", 1}}, 2)), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(gen_names(graded(2, {{"x", 1}}, 3)), (std::vector<std::string>{"x"}));
  const auto field = graded(2, {}, 1);
  EXPECT_TRUE(minimal_generators(field).empty());
  EXPECT_EQ(cotangent_dimension(field), 0U);
}

TEST(GradedClassify, Examples) {
  const auto u = graded_avoidance_classify(graded(2, {{"x", 1}}, 4));
  EXPECT_TRUE(u.avoidance && u.pir && u.truncated_univariate);
  const auto p = graded_avoidance_classify(graded(2, {{"x", 1}, {"y", 1}}, 2));
  EXPECT_FALSE(p.avoidance || p.pir || p.truncated_univariate);
  const auto q = graded_avoidance_classify(graded(3, {{"x", 1}, {"y", 1}}, 3, {"x^2", "x*y", "y^2"}));
  EXPECT_FALSE(q.avoidance || q.pir || q.truncated_univariate);
}

TEST(GradedOracle, GeneratorCountIsMinimal) {
  harness::CorpusParams params;
  params.max_ring_size = 256;
  params.count = 0;
  params.graded_count = 60;
  std::size_t checked = 0;
  for (const auto& d : harness::generate_corpus(404, params).graded) {
    const auto& g = std::get<Graded>(d.node);
    if (g.vars.size() > 3 || g.truncation > 3) continue;
    const auto algebra = build_graded(g);
    const auto m = ideal_generated(algebra.ring, minimal_generators(algebra));
    // m is the span of positive-degree basis elements; the generators must
    // produce all of it.
    const Ideal maximal = spectrum(algebra.ring).maximals.at(0);
    EXPECT_EQ(m.members(), maximal.members());
    const std::size_t count = minimal_generators(algebra).size();
    EXPECT_EQ(count, cotangent_dimension(algebra));
    const auto brute = oracle::min_generating_set_size(algebra.ring, maximal.members(), count);
    ASSERT_TRUE(brute.has_value()) << to_string(d);
    EXPECT_EQ(*brute, count) << to_string(d);
    ++checked;
  }
  EXPECT_GT(checked, 10U);
}

TEST(GradedProperties, ClassificationAndCotangent) {
  harness::CorpusParams params;
  params.count = 0;
  params.graded_count = 80;
  for (const auto& d : harness::generate_corpus(405, params).graded) {
    const auto algebra = build_graded(std::get<Graded>(d.node));
    const auto c = graded_avoidance_classify(algebra);
    EXPECT_EQ(c.avoidance, c.pir && c.truncated_univariate);
    if (c.avoidance) EXPECT_LE(minimal_generators(algebra).size(), 1U);
    const Ideal maximal = spectrum(algebra.ring).maximals.at(0);
    const Ideal square = ideal_product(maximal, maximal);
    std::size_t ratio = maximal.size() / square.size(), dim = 0;
    while (ratio > 1) {
      ratio /= algebra.field->size();
      ++dim;
    }
    EXPECT_EQ(cotangent_dimension(algebra), dim);
  }
}

TEST(LinearAlgebra, Examples) {
  const Ring f2 = fixtures::gf(2);
  const Elem o = f2->one(), z = f2->zero();
  EXPECT_EQ(field_linear_algebra(f2, {{o, z}, {z, o}}, 2).rank, 2U);
  const auto r = field_linear_algebra(f2, {{o, o}, {o, o}}, 2);
  EXPECT_EQ(r.rank, 1U);
  ASSERT_EQ(r.kernel_basis.size(), 1U);
  EXPECT_EQ(r.kernel_basis[0], (Vector{o, o}));
  EXPECT_EQ(field_linear_algebra(f2, {{z, z}, {z, z}}, 2).rank, 0U);
}

TEST(LinearAlgebra, RankNullity) {
  const Ring f5 = fixtures::gf(5);
  harness::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = rng.between(1, 5), cols = rng.between(1, 5);
    Matrix a(rows, Vector(cols));
    for (auto& row : a)
      for (auto& e : row) e = static_cast<Elem>(rng.below(5));
    const auto r = field_linear_algebra(f5, a, cols);
    EXPECT_EQ(r.rank + r.kernel_basis.size(), cols);
    for (const auto& v : r.kernel_basis)
      for (const auto& row : a) {
        Elem s = f5->zero();
        for (std::size_t c = 0; c < cols; ++c) s = f5->add(s, f5->mul(row[c], v[c]));
        EXPECT_EQ(s, f5->zero());
      }
  }
}

}  // namespace
