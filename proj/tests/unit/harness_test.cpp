#include <gtest/gtest.h>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/serialize.hpp"
#include "avoidance/harness/corpus.hpp"
#include "avoidance/harness/suites.hpp"

namespace {

using namespace avoidance;
using namespace avoidance::harness;
using nlohmann::json;

Corpus golden() { return generate_corpus(1, {.count = 0}); }

TEST(Corpus, CountPlusGolden) {
  const auto c = generate_corpus(1, {.count = 50});
  EXPECT_EQ(c.specs.size(), 55U);
  const auto g = golden_rings();
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(to_json(c.specs[i]), to_json(g[i]));
  EXPECT_FALSE(c.low_diversity);
}

TEST(Corpus, RegenerationIsByteIdentical) {
  const auto a = to_json(generate_corpus(99, {.count = 40})).dump();
  const auto b = to_json(generate_corpus(99, {.count = 40})).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, to_json(generate_corpus(100, {.count = 40})).dump());
}

TEST(Corpus, GoldenOnly) {
  const auto c = golden();
  EXPECT_EQ(c.specs.size(), 5U);
  EXPECT_EQ(c.modules.size(), golden_modules().size());
  EXPECT_EQ(c.graded.size(), golden_graded().size());
}

TEST(Corpus, WithoutPolynomialQuotientsIsLowDiversity) {
  CorpusParams p;
  p.count = 40;
  p.mix = ConstructorMix{.zmod = 3, .product = 2, .poly_quotient = 0, .quotient = 1, .idealization = 0};
  const auto c = generate_corpus(4, p);
  EXPECT_TRUE(c.low_diversity);
  // Past the golden set everything is built from Z/n, so every ring is a PIR.
  for (std::size_t i = golden_rings().size(); i < c.specs.size(); ++i)
    EXPECT_TRUE(is_avoidance_ring(build_ring(c.specs[i]))) << to_string(c.specs[i]);
}

TEST(Corpus, RespectsSizeBound) {
  const auto c = generate_corpus(8, {.max_ring_size = 32, .count = 40});
  for (std::size_t i = golden_rings().size(); i < c.specs.size(); ++i)
    EXPECT_LE(build_ring(c.specs[i])->size(), 32U);
  try {
    (void)generate_corpus(1, {.max_ring_size = 1u << 30});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeBound);
  }
}

TEST(Suites, GoldenAvoidanceOracle) {
  const auto r = run_suite(golden(), "avoidance-oracle");
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.vacuous);
  bool plane_recorded = false;
  for (const auto& f : r.findings)
    if (f["kind"] == "non-avoidance" && f["ring"] == to_json(golden_rings()[1])) {
      plane_recorded = true;
      EXPECT_EQ(f["ideal"], "(x,y)");
      EXPECT_EQ(f["cover_size"], 3);
    }
  EXPECT_TRUE(plane_recorded);
}

TEST(Suites, GoldenMcCoyHasOptimalityWitness) {
  const auto r = run_suite(golden(), "mccoy");
  EXPECT_TRUE(r.passed());
  bool witness = false;
  for (const auto& f : r.findings)
    if (f["kind"] == "intersection-bound-attained" && f["ring"] == to_json(golden_rings()[1]) && f["n"] == 3 &&
        f["intersection_exponent"] == 2)
      witness = true;
  EXPECT_TRUE(witness);
}

TEST(Suites, EmptyCorpusIsVacuous) {
  const Corpus empty;
  for (const auto& id : suite_ids()) {
    const auto r = run_suite(empty, id);
    EXPECT_TRUE(r.vacuous) << id;
    for (const auto& e : r.entries) EXPECT_EQ(e.instances_checked, 0U);
  }
}

TEST(Suites, UnknownSuite) {
  try {
    (void)run_suite(golden(), "nonsense");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
}

TEST(Suites, ConjectureIsNonAsserting) {
  const auto r = run_suite(golden(), "conjecture");
  ASSERT_EQ(r.entries.size(), 1U);
  EXPECT_FALSE(r.entries[0].asserting);
  EXPECT_EQ(r.findings.size(), golden_rings().size());
}

TEST(Suites, DeterministicAcrossWorkerCounts) {
  const auto corpus = generate_corpus(31, {.max_ring_size = 64, .count = 25});
  SuiteOptions one, many;
  many.jobs = 4;
  for (const char* id : {"avoidance-oracle", "mccoy", "maps", "modules"}) {
    const auto a = to_json(run_suite(corpus, id, one)).dump();
    const auto b = to_json(run_suite(corpus, id, many)).dump();
    const auto c = to_json(run_suite(corpus, id, one)).dump();
    EXPECT_EQ(a, b) << id;
    EXPECT_EQ(a, c) << id;
  }
}

TEST(Suites, AllPassesOnSmallCorpus) {
  const auto r = run_suite(generate_corpus(5, {.max_ring_size = 64, .count = 30}), "all");
  EXPECT_TRUE(r.passed());
  for (const auto& e : r.entries) EXPECT_TRUE(e.failures.empty()) << e.theorem_id << " " << e.failures[0].witness;
}

TEST(Replay, WitnessesReproduceObservations) {
  const json plane = to_json(golden_rings()[1]);
  const json witness = {{"operation", "ideal_properties"}, {"args", {{"ideal", {"x", "y"}}}}};
  const auto a = replay_witness(plane, witness);
  EXPECT_EQ(a["has_avoidance"], false);
  EXPECT_EQ(a["principal"], false);
  EXPECT_EQ(a, replay_witness(plane, witness));

  const json cover = {{"operation", "mccoy"},
                      {"args", {{"target", {"x", "y"}}, {"members", {{"x"}, {"y"}, {"x+y"}}}}}};
  const auto m = replay_witness(plane, cover);
  EXPECT_EQ(m["intersection_exponent"], 2);
  EXPECT_EQ(m["bound"], 2);

  const json bad = {{"operation", "mccoy"}, {"args", {{"target", {"1"}}, {"members", {{"x"}}}}}};
  EXPECT_EQ(replay_witness(plane, bad)["error"], "NotACover");
}

TEST(Replay, ObservationsMatchDirectCalls) {
  for (const auto& d : golden_rings()) {
    const Ring ring = build_ring(d);
    for (const auto& i : all_ideals(ring)) {
      json gens = json::array();
      for (Elem g : small_generating_set(i)) gens.push_back(ring->name(g));
      const json w = {{"operation", "ideal_properties"}, {"args", {{"ideal", gens}}}};
      const auto observed = replay_witness(to_json(d), w);
      EXPECT_EQ(observed["has_avoidance"].get<bool>(), has_avoidance(i));
      EXPECT_EQ(observed["principal"].get<bool>(), is_principal(i));
      EXPECT_EQ(observed, replay_witness(to_json(d), w));
    }
  }
}

TEST(Report, JsonShape) {
  const auto j = to_json(run_suite(golden(), "primary"));
  EXPECT_EQ(j["suite"], "primary");
  EXPECT_EQ(j["engine_version"], kEngineVersion);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["entries"][0].contains("elapsed_ms"));
  const auto timed = to_json(run_suite(golden(), "primary"), true);
  EXPECT_TRUE(timed["entries"][0].contains("elapsed_ms"));
}

}  // namespace
