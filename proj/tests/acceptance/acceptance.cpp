// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/integers.hpp"
#include "avoidance/module.hpp"
#include "avoidance/harness/corpus.hpp"
#include "avoidance/harness/suites.hpp"
#include "oracles.hpp"

namespace {

using namespace avoidance;
using namespace avoidance::harness;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body,
               double time_limit = 0) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double s = seconds_since(start);
  if (time_limit > 0 && s >= time_limit) {
    o.pass = false;
    o.detail << " [took " << s << " s, limit " << time_limit << " s]";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s:%s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), s);
  std::fflush(stdout);
}

Ideal gens(const Ring& r, std::initializer_list<const char*> names) {
  std::vector<Elem> e;
  for (const char* n : names) e.push_back(r->parse_element(n));
  return ideal_generated(r, e);
}

Ring plane(std::uint64_t p, unsigned k = 1) { return build_ring(desc::poly_quotient(desc::gf(p, k), {"x", "y"}, 2)); }

const TheoremEntry& entry(const VerificationReport& r, const std::string& id) {
  if (const auto* e = r.entry(id)) return *e;
  throw std::runtime_error("report " + r.suite + " has no entry " + id);
}

void clean(Outcome& o, const VerificationReport& r, const std::string& id, std::size_t at_least) {
  const auto& e = entry(r, id);
  o.detail << " " << id << "=" << e.instances_checked << "/" << e.failures.size() << "f";
  o.require(e.failures.empty(), id + " has failures");
  o.require(e.instances_checked >= at_least, id + " checked fewer than " + std::to_string(at_least));
}

}  // namespace

int main() {
  const auto corpus_start = Clock::now();
  CorpusParams params;
  params.max_ring_size = 256;
  params.count = 200;
  const Corpus corpus = generate_corpus(kSeed, params);
  SuiteOptions options;
  options.irredundant_covers = 500;
  options.product_pairs = 100;
  options.composable_pairs = 100;
  std::printf("corpus seed=%llu rings=%zu modules=%zu graded=%zu (%.2f s)\n",
              static_cast<unsigned long long>(kSeed), corpus.specs.size(), corpus.modules.size(),
              corpus.graded.size(), seconds_since(corpus_start));

  criterion(1, "golden non-avoidance example F2[x,y]/m^2", [](Outcome& o) {
    const Ring r = plane(2);
    const auto lattice = all_ideals(r);
    const Ideal m = gens(r, {"x", "y"});
    o.detail << " ideals=" << lattice.size();
    o.require(r->size() == 8, "8 elements");
    o.require(lattice.size() == 6, "exactly 6 ideals");
    o.require(!is_principal(m), "(x,y) non-principal");
    o.require(!has_avoidance(m, lattice), "has_avoidance((x,y)) = false");
    const auto mc = min_cover(m, lattice);
    o.require(mc.has_value(), "min cover exists");
    if (mc) {
      std::vector<std::string> labels;
      for (const auto& i : mc->family.members) labels.push_back(ideal_label(i));
      o.detail << " cover=";
      for (const auto& l : labels) o.detail << l;
      o.require(mc->size == 3 && mc->certified_minimal, "min cover size 3, certified");
      o.require(labels == std::vector<std::string>{"(x)", "(y)", "(x+y)"}, "cover {(x),(y),(x+y)}");
    }
    std::vector<ElementSet> sets;
    for (const auto& i : oracle::ideals(r)) sets.push_back(i);
    const auto brute = oracle::min_cover(m.members(), sets);
    o.require(sets.size() == 6 && brute && brute->size() == 3, "brute-force oracle agrees on 6 ideals and size 3");
    o.require(!is_avoidance_ring(lattice), "is_avoidance_ring = false");
  }, 1.0);

  VerificationReport mccoy_report, oracle_report;
  criterion(2, "McCoy exponents and the n-1 bound", [&](Outcome& o) {
    const Ring r = plane(2);
    const auto result = mccoy(CoverFamily{gens(r, {"x", "y"}), {gens(r, {"x"}), gens(r, {"y"}), gens(r, {"x+y"})}});
    o.detail << " golden d=" << (result.intersection_exponent ? int(*result.intersection_exponent) : -1)
             << " n-1=" << result.bound;
    o.require(result.intersection_exponent == 2u && result.bound == 2, "golden intersection exponent 2 = n-1");
    mccoy_report = run_suite(corpus, "mccoy", options);
    clean(o, mccoy_report, "irredundant-intersection-bound", 500);
    clean(o, mccoy_report, "per-member-exponent", 500);
  }, 60.0);

  criterion(3, "avoidance iff PIR over the corpus", [&](Outcome& o) {
    std::size_t largest = 0;
    for (const auto& d : corpus.specs) largest = std::max(largest, build_ring(d)->size());
    o.detail << " rings=" << corpus.specs.size() << " max|R|=" << largest;
    o.require(corpus.specs.size() >= 200, "at least 200 rings");
    o.require(largest <= 256, "sizes at most 256");
    oracle_report = run_suite(corpus, "avoidance-oracle", options);
    o.require(oracle_report.skipped == 0 && mccoy_report.skipped == 0, "no skipped instances");
    clean(o, oracle_report, "avoidance-iff-principal", corpus.specs.size());
    clean(o, mccoy_report, "two-member-cover", 1);
    clean(o, mccoy_report, "radical-variant", 1);
    clean(o, oracle_report, "idempotent-has-avoidance", 1);
  });

  criterion(4, "avoidance of finite products", [&](Outcome& o) {
    const auto r = run_suite(corpus, "products", options);
    clean(o, r, "product-avoidance", 100);
  });

  criterion(5, "local criterion and reassembly", [&](Outcome& o) {
    const auto r = run_suite(corpus, "local-criterion", options);
    o.require(r.skipped == 0, "no skipped instances");
    clean(o, r, "local-criterion", corpus.specs.size());
    clean(o, r, "local-reassembly", corpus.specs.size());
  });

  VerificationReport modules_report = run_suite(corpus, "modules", options);
  criterion(6, "covers of F_q^2 have q+1 members", [&](Outcome& o) {
    o.detail << " sizes=";
    const std::vector<std::pair<std::uint64_t, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}};
    for (const auto& [p, k] : fields) {
      const std::size_t q = k == 1 ? p : p * p;
      const Ring pl = plane(p, k);
      const auto mc = min_cover(gens(pl, {"x", "y"}));
      const Ring field = build_ring(desc::gf(p, k));
      const Module m = build_module(field, desc::free_module(2));
      const auto mcm = module_min_cover(m, all_submodules(m));
      const auto lemma = lemma3_cover(m, ideal_generated(field, {}));
      bool proper = lemma.size() == q + 1;
      ElementSet u(m->size());
      for (const auto& s : lemma) {
        proper = proper && s.size() < m->size();
        u |= s.members();
      }
      o.detail << (mc ? mc->size : 0) << "/" << (mcm ? mcm->size : 0) << "/" << lemma.size() << " ";
      o.require(mc && mc->size == q + 1 && mc->certified_minimal, "ideal min cover q+1 for q=" + std::to_string(q));
      o.require(mcm && mcm->size == q + 1 && mcm->certified_minimal, "module min cover q+1 for q=" + std::to_string(q));
      o.require(proper && u.count() == m->size(), "lemma3_cover q+1 proper members covering M");
    }
    clean(o, modules_report, "residue-cover-size", 1);
  }, 10.0);

  VerificationReport maps_report = run_suite(corpus, "maps", options);
  criterion(7, "quotient and extension transfer", [&](Outcome& o) {
    clean(o, maps_report, "surjection-every-ideal-extended", corpus.specs.size());
    clean(o, maps_report, "quotient-transfer", corpus.specs.size());
  });

  criterion(8, "map avoidance and purity", [&](Outcome& o) {
    const Ring r = plane(2);
    o.require(!map_has_avoidance(RingMap::identity(r)), "identity on F2[x,y]/m^2 has no avoidance");
    clean(o, maps_report, "composite-monotonicity", 100);
    std::size_t idealizations = corpus.modules.size();
    for (const auto& d : corpus.specs) idealizations += std::holds_alternative<Idealization>(d.node);
    o.require(modules_report.skipped == 0, "no skipped modules");
    clean(o, modules_report, "idealization-cyclically-pure", idealizations);
    clean(o, modules_report, "idealization-bridge", idealizations);
  });

  criterion(9, "graded algebras", [&](Outcome& o) {
    o.detail << " graded=" << corpus.graded.size();
    o.require(corpus.graded.size() >= 100, "at least 100 graded algebras");
    const auto r = run_suite(corpus, "graded", options);
    o.require(r.skipped == 0, "no skipped instances");
    clean(o, r, "graded-avoidance-implies-pir", 1);
    clean(o, r, "graded-avoidance-implies-one-generator", 1);
    clean(o, r, "minimal-generators-count", corpus.graded.size());
  });

  criterion(10, "integer covers", [](Outcome& o) {
    constexpr std::uint64_t kMax = 10000, kCap = 1U << 16;
    constexpr std::size_t kTrials = 100000;
    Rng rng(derive_seed(kSeed, 10));
    std::size_t accepted = 0, rejected = 0, covers = 0, disagreements = 0, bad_exponent = 0;
    while (accepted < kTrials) {
      const std::uint64_t n = rng.log_uniform(kMax);
      std::vector<zz::ZIdeal> family;
      const auto k = rng.between(1, 4);
      for (std::uint64_t i = 0; i < k; ++i) family.push_back({rng.log_uniform(kMax)});
      if (rng.chance(1, 2)) {
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t d = 1; d <= n; ++d)
          if (n % d == 0) divisors.push_back(d);
        family.insert(family.begin() + static_cast<std::ptrdiff_t>(rng.below(family.size() + 1)),
                      zz::ZIdeal{rng.pick(divisors)});
      }
      bool decided = false;
      try {
        decided = zz::cover_decision({n}, family, kCap);
      } catch (const Error& e) {
        if (!e.is_resource_bound()) throw;
        ++rejected;
        continue;
      }
      ++accepted;
      const bool shortcut = zz::containing_member({n}, family).has_value();
      if (decided != shortcut) ++disagreements;
      if (decided) {
        ++covers;
        if (zz::mccoy({n}, family, kCap).exponent != 1) ++bad_exponent;
      }
    }
    o.detail << " trials=" << accepted << " covers=" << covers << " rejected=" << rejected
             << " disagreements=" << disagreements;
    o.require(disagreements == 0, "residue decision agrees with divisibility");
    o.require(bad_exponent == 0, "every cover has a containing member (d = 1)");
  }, 30.0);

  criterion(11, "conjecture probe is non-asserting", [&](Outcome& o) {
    std::vector<RingDescription> from = golden_rings();
    for (std::uint64_t n : {2, 3, 4, 6, 8, 12}) from.push_back(desc::zmod(n));
    const Ring f6 = build_ring(desc::product({desc::gf(2), desc::gf(3)}));
    const auto a = conjecture_probe(f6, conjecture_sources(f6, from, 16));
    o.detail << " F2xF3 maps=" << a.maps_checked << " failing=" << a.failing_maps.size();
    o.require(a.right_side, "F2 x F3 right side true");
    o.require(a.failing_maps.empty() && a.maps_checked > 0, "no failing sampled maps");
    const Ring z4 = build_ring(desc::zmod(4));
    const auto b = to_json(conjecture_probe(z4, conjecture_sources(z4, from, 16)));
    o.detail << " Z/4 maps=" << b["maps_checked"] << " failing=" << b["failing_maps"].size();
    o.require(!b.contains("passed") && b.contains("sampled_left_side"), "Z/4 report without verdict");
    const auto suite = run_suite(corpus, "conjecture", options);
    o.require(!entry(suite, "conjecture-probe").asserting, "conjecture suite entry non-asserting");
  });

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
