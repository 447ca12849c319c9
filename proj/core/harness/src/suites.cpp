#include "avoidance/harness/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/maps.hpp"
#include "avoidance/module.hpp"
#include "avoidance/serialize.hpp"
#include "operations.hpp"

namespace avoidance::harness {

using nlohmann::json;
using detail::Context;

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const TheoremEntry& e) { return !e.asserting || e.failures.empty(); });
}

const TheoremEntry* VerificationReport::entry(std::string_view id) const {
  for (const auto& e : entries)
    if (e.theorem_id == id) return &e;
  return nullptr;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"mccoy",   "avoidance-oracle", "products", "local-criterion", "modules",
                                               "graded",  "maps",             "primary",  "conjecture",      "all"};
  return ids;
}

json to_json(const McCoyResult& r) {
  return {{"per_member_exponent", r.per_member_exponent},
          {"per_member_witness", r.per_member_witness},
          {"intersection_exponent", r.intersection_exponent ? json(*r.intersection_exponent) : json(nullptr)},
          {"bound", r.bound}};
}

json to_json(const ConjectureReport& r) {
  return {{"target", json::parse(r.target)},
          {"right_side", r.right_side},
          {"sampled_left_side", r.sampled_left_side},
          {"maps_checked", r.maps_checked},
          {"failing_maps", r.failing_maps},
          {"low_confidence", r.low_confidence},
          {"sides_agree", r.sides_agree}};
}

json to_json(const VerificationReport& report, bool timing) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json failures = json::array();
    for (const auto& f : e.failures) failures.push_back({{"ring", f.ring}, {"witness", f.witness}});
    json entry = {{"theorem_id", e.theorem_id},
                  {"instances_checked", e.instances_checked},
                  {"asserting", e.asserting},
                  {"failures", failures}};
    if (timing) entry["elapsed_ms"] = e.elapsed_ms;
    entries.push_back(std::move(entry));
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"engine_version", report.engine_version},
          {"passed", report.passed()},
          {"vacuous", report.vacuous},
          {"low_diversity", report.low_diversity},
          {"skipped", report.skipped},
          {"entries", entries},
          {"findings", report.findings},
          {"notes", report.notes}};
}

json replay_witness(const json& ring, const json& witness, const Limits& limits) {
  Context ctx(ring, limits);
  return detail::evaluate(ctx, witness.at("operation").get<std::string>(), witness.at("args"));
}

std::vector<ProbeSource> conjecture_sources(const Ring& target, const std::vector<RingDescription>& from,
                                            std::size_t samples, const Limits& limits) {
  std::vector<ProbeSource> out;
  auto add = [&](std::string label, RingMap map) {
    if (out.size() < samples) out.push_back(ProbeSource{std::move(label), std::move(map)});
  };
  add("identity", RingMap::identity(target));
  const auto prime = subring_generated(target, {});
  if (prime.ring->size() < target->size())
    add("prime subring Z/" + std::to_string(prime.ring->size()), prime.inclusion);
  const std::size_t per_source = std::max<std::size_t>(1, samples / std::max<std::size_t>(1, from.size()));
  for (const auto& d : from) {
    if (out.size() >= samples) break;
    const Ring source = build_ring(d, limits);
    const auto homs = enumerate_homomorphisms(source, target, per_source);
    for (std::size_t k = 0; k < homs.size(); ++k) add("hom " + to_string(d) + " #" + std::to_string(k), homs[k]);
  }
  std::vector<ElementSet> seen;
  for (Elem x = 0; x < target->size() && out.size() < samples; ++x) {
    auto sub = subring_generated(target, {x});
    const std::size_t n = sub.ring->size();
    if (n == prime.ring->size() || n == target->size()) continue;
    ElementSet members(target->size());
    for (Elem e : sub.inclusion.image()) members.set(e);
    if (std::find(seen.begin(), seen.end(), members) != seen.end()) continue;
    seen.push_back(members);
    add("subring generated by " + target->name(x), sub.inclusion);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct EntryLog {
  std::size_t checked = 0;
  std::vector<Failure> failures;
  double ms = 0;
};

struct ItemLog {
  std::vector<EntryLog> entries;
  std::vector<json> findings;
  std::size_t skipped = 0;
};

/// Per-item evaluation helper: observations go through the shared
/// operation table so every failure carries a replayable witness.
class Checker {
 public:
  Checker(ItemLog& log, const json& ring, const Limits& limits) : log_(log) {
    try {
      ctx_ = std::make_unique<Context>(ring, limits);
    } catch (const Error& e) {
      if (e.is_resource_bound()) {
        ++log_.skipped;
        return;
      }
      log_.entries[0].checked++;
      log_.entries[0].failures.push_back(
          Failure{ring, {{"operation", "build"}, {"args", json::object()}, {"observed", {{"error", to_string(e.kind())}}}}});
    }
  }

  [[nodiscard]] bool ok() const noexcept { return ctx_ != nullptr; }
  Context& ctx() { return *ctx_; }

  /// Nullopt when the operation hit a resource bound.
  std::optional<json> observe(const std::string& op, const json& args) {
    const auto start = Clock::now();
    std::optional<json> out;
    try {
      out = detail::evaluate(*ctx_, op, args);
    } catch (const Error& e) {
      ++log_.skipped;
    } catch (const std::exception& e) {
      out = json{{"error", "Internal"}, {"detail", e.what()}};
    }
    last_ms_ = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
  }

  void expect(std::size_t entry, const std::string& op, const json& args, const json& observed,
              const std::function<bool(const json&)>& holds) {
    auto& e = log_.entries[entry];
    ++e.checked;
    e.ms += last_ms_;
    bool good = false;
    if (!observed.contains("error")) {
      try {
        good = holds(observed);
      } catch (const json::exception&) {
        good = false;
      }
    }
    if (!good)
      e.failures.push_back(Failure{ctx_->desc(), {{"operation", op}, {"args", args}, {"observed", observed}}});
  }

  /// observe + expect for a single entry.
  std::optional<json> check(std::size_t entry, const std::string& op, const json& args,
                            const std::function<bool(const json&)>& holds) {
    auto obs = observe(op, args);
    if (obs) expect(entry, op, args, *obs, holds);
    return obs;
  }

  void finding(json f) { log_.findings.push_back(std::move(f)); }

 private:
  ItemLog& log_;
  std::unique_ptr<Context> ctx_;
  double last_ms_ = 0;
};

struct SuiteDef {
  std::vector<std::string> ids;
  std::vector<bool> asserting;  // empty: all asserting
  std::size_t items = 0;
  std::function<void(std::size_t, ItemLog&)> run;
  std::vector<std::string> notes;
};

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

VerificationReport execute(std::string name, const SuiteDef& def, const Corpus& corpus, const SuiteOptions& options) {
  std::vector<ItemLog> logs(def.items);
  for (auto& l : logs) l.entries.resize(def.ids.size());
  parallel_for(def.items, options.jobs, [&](std::size_t i) { def.run(i, logs[i]); });

  VerificationReport report;
  report.suite = std::move(name);
  report.seed = corpus.seed;
  report.low_diversity = corpus.low_diversity;
  report.notes = def.notes;
  for (std::size_t k = 0; k < def.ids.size(); ++k) {
    TheoremEntry e;
    e.theorem_id = def.ids[k];
    e.asserting = def.asserting.empty() || def.asserting[k];
    for (auto& l : logs) {
      e.instances_checked += l.entries[k].checked;
      e.elapsed_ms += l.entries[k].ms;
      for (auto& f : l.entries[k].failures) e.failures.push_back(std::move(f));
    }
    report.entries.push_back(std::move(e));
  }
  for (auto& l : logs) {
    report.skipped += l.skipped;
    for (auto& f : l.findings) report.findings.push_back(std::move(f));
  }
  std::size_t total = 0;
  for (const auto& e : report.entries) total += e.instances_checked;
  report.vacuous = total == 0;
  if (report.vacuous) report.notes.push_back("VACUOUS: no instances were checked");
  if (report.low_diversity) report.notes.push_back("LOW-DIVERSITY: constructor mix has no polynomial quotients");
  return report;
}

std::uint64_t item_seed(const Corpus& c, std::uint64_t salt, std::size_t item) {
  return derive_seed(c.seed, salt * 1000003ULL + item + 17);
}

json gens_of(const Ideal& ideal) {
  json out = json::array();
  for (Elem g : small_generating_set(ideal)) out.push_back(ideal.r().name(g));
  return out;
}

json family_json(const std::vector<const Ideal*>& members) {
  json out = json::array();
  for (const auto* m : members) out.push_back(gens_of(*m));
  return out;
}

// ---------------------------------------------------------------- suites

SuiteDef avoidance_oracle(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"avoidance-iff-principal",          "idempotent-has-avoidance", "pure-implies-idempotent",
             "idempotent-generated-by-idempotent", "radical-of-powers",        "primary-radical-is-prime",
             "min-cover-consistent"};
  def.items = corpus.specs.size();
  def.run = [&corpus, &options](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.specs[i]), options.limits);
    if (!c.ok()) return;
    c.check(0, "ring_avoidance", json::object(), [](const json& o) { return o["avoidance"] == o["all_principal"]; });
    const auto& lattice = c.ctx().lattice();
    std::size_t covers_checked = 0;
    bool recorded = false;
    for (const auto& ideal : lattice) {
      const json args = {{"ideal", gens_of(ideal)}};
      const auto obs = c.observe("ideal_properties", args);
      if (!obs) continue;
      const auto& o = *obs;
      const auto flag = [&](const char* k) { return o.contains(k) && o[k].get<bool>(); };
      c.expect(0, "ideal_properties", args, o, [](const json& p) { return p["has_avoidance"] == p["principal"]; });
      if (flag("idempotent"))
        c.expect(1, "ideal_properties", args, o, [](const json& p) { return p["has_avoidance"].get<bool>(); });
      if (flag("pure"))
        c.expect(2, "ideal_properties", args, o, [](const json& p) { return p["idempotent"].get<bool>(); });
      if (flag("idempotent"))
        c.expect(3, "ideal_properties", args, o, [](const json& p) { return p["idempotent_generator"].get<bool>(); });
      c.expect(4, "ideal_properties", args, o, [](const json& p) { return p["radical_powers_agree"].get<bool>(); });
      if (flag("primary"))
        c.expect(5, "ideal_properties", args, o, [](const json& p) { return p["primary_radical_prime"].get<bool>(); });
      const bool avoids = flag("has_avoidance");
      if (avoids || covers_checked < 4) {
        if (!avoids) ++covers_checked;
        auto mc = c.check(6, "min_cover", args, [avoids](const json& m) {
          return avoids ? m["size"].is_null() : (!m["size"].is_null() && m["size"].get<std::size_t>() >= 3);
        });
        if (!avoids && !recorded && mc && !mc->contains("error")) {
          recorded = true;
          c.finding({{"kind", "non-avoidance"},
                     {"ring", c.ctx().desc()},
                     {"ideal", ideal_label(ideal)},
                     {"cover", (*mc)["members"]},
                     {"cover_size", (*mc)["size"]}});
        }
      }
    }
  };
  return def;
}

SuiteDef mccoy_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"per-member-exponent", "irredundant-intersection-bound", "two-member-cover", "radical-variant"};
  def.items = corpus.specs.size();
  const std::size_t quota =
      corpus.specs.empty() ? 0 : (options.irredundant_covers + corpus.specs.size() - 1) / corpus.specs.size();
  def.run = [&corpus, &options, quota](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.specs[i]), options.limits);
    if (!c.ok()) return;
    Rng rng(item_seed(corpus, 1, i));
    const auto& lattice = c.ctx().lattice();
    const std::size_t n = c.ctx().ring()->size();
    bool attained = false;

    auto run_irredundant = [&](const Ideal& target, const std::vector<const Ideal*>& members) {
      const json args = {{"target", gens_of(target)}, {"members", family_json(members)}};
      auto obs = c.observe("mccoy", args);
      if (!obs) return;
      c.expect(0, "mccoy", args, *obs, [](const json& o) { return o["per_member_exponent"].get<unsigned>() >= 1; });
      c.expect(1, "mccoy", args, *obs, [](const json& o) {
        return o["irredundant"].get<bool>() && !o["intersection_exponent"].is_null() &&
               o["intersection_exponent"].get<unsigned>() <= o["bound"].get<unsigned>();
      });
      if (!attained && members.size() >= 3 && !obs->contains("error") &&
          (*obs)["intersection_exponent"] == (*obs)["bound"]) {
        attained = true;
        json labels = json::array();
        for (const auto* m : members) labels.push_back(ideal_label(*m));
        c.finding({{"kind", "intersection-bound-attained"},
                   {"ring", c.ctx().desc()},
                   {"target", ideal_label(target)},
                   {"members", labels},
                   {"n", members.size()},
                   {"intersection_exponent", (*obs)["intersection_exponent"]}});
      }
    };

    // Minimal covers of the non-avoidance ideals are irredundant.
    std::size_t irredundant = 0;
    for (std::size_t k = 0; k < lattice.size() && irredundant < 2; ++k) {
      if (has_avoidance(lattice[k], lattice)) continue;
      const auto mc = min_cover(lattice[k], lattice);
      std::vector<const Ideal*> members;
      for (const auto& m : mc->family.members) members.push_back(&lattice[lattice.index_of(m)]);
      run_irredundant(lattice[k], members);
      ++irredundant;
    }

    const std::size_t attempts = 40 * std::max<std::size_t>(quota, 1);
    for (std::size_t t = 0; t < attempts && irredundant < quota; ++t) {
      const Ideal& target = lattice[rng.below(lattice.size())];
      std::vector<std::size_t> pool;
      const bool avoid_containing = rng.chance(3, 4);
      for (std::size_t k = 0; k < lattice.size(); ++k)
        if (!avoid_containing || !target.is_subset_of(lattice[k])) pool.push_back(k);
      if (pool.empty()) continue;
      const auto size = std::min<std::size_t>(pool.size(), rng.between(1, 5));
      std::vector<const Ideal*> members;
      for (std::size_t s = 0; s < size; ++s) {
        const auto at = rng.below(pool.size());
        members.push_back(&lattice[pool[at]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
      }
      ElementSet united(n);
      for (const auto* m : members) united |= m->members();
      if (!target.members().is_subset_of(united)) continue;

      const json args = {{"target", gens_of(target)}, {"members", family_json(members)}};
      c.check(0, "mccoy", args, [](const json& o) { return o["per_member_exponent"].get<unsigned>() >= 1; });
      if (members.size() <= 2)
        c.check(2, "containing_member", args, [](const json& o) { return !o["index"].is_null(); });
      const auto non_radical =
          std::count_if(members.begin(), members.end(), [](const Ideal* m) { return !is_radical(*m); });
      if (non_radical <= 2)
        c.check(3, "radical_variant", args, [](const json& o) { return o.contains("index"); });

      // Drop redundant members in a random order.
      std::vector<const Ideal*> kept = members;
      for (std::size_t s = kept.size(); s-- > 0;) {
        const auto at = rng.below(s + 1);
        std::swap(kept[s], kept[at]);
      }
      for (std::size_t s = 0; s < kept.size();) {
        ElementSet rest(n);
        for (std::size_t o = 0; o < kept.size(); ++o)
          if (o != s) rest |= kept[o]->members();
        if (kept.size() > 1 && target.members().is_subset_of(rest)) {
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(s));
        } else {
          ++s;
        }
      }
      std::sort(kept.begin(), kept.end());
      run_irredundant(target, kept);
      ++irredundant;
    }
  };
  return def;
}

SuiteDef products_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"product-avoidance", "product-ideal-count"};
  // Ring sizes decide which pairs fit under the bound.
  std::vector<std::size_t> sizes(corpus.specs.size(), 0);
  parallel_for(corpus.specs.size(), options.jobs, [&](std::size_t i) {
    try {
      sizes[i] = build_ring(corpus.specs[i], options.limits)->size();
    } catch (const Error& e) {
      if (!e.is_resource_bound()) throw;
    }
  });
  auto pairs = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
  Rng rng(item_seed(corpus, 2, 0));
  const std::size_t bound = corpus.params.max_ring_size;
  for (std::size_t t = 0; t < 200 * options.product_pairs && pairs->size() < options.product_pairs; ++t) {
    if (corpus.specs.empty()) break;
    const auto a = rng.below(corpus.specs.size()), b = rng.below(corpus.specs.size());
    if (sizes[a] == 0 || sizes[b] == 0 || sizes[a] * sizes[b] > bound) continue;
    pairs->emplace_back(a, b);
  }
  def.items = pairs->size();
  def.run = [&corpus, &options, pairs](std::size_t i, ItemLog& log) {
    const auto [a, b] = (*pairs)[i];
    Checker c(log, to_json(desc::product({corpus.specs[a], corpus.specs[b]})), options.limits);
    if (!c.ok()) return;
    auto obs = c.observe("product_avoidance", json::object());
    if (!obs) return;
    c.expect(0, "product_avoidance", json::object(), *obs, [](const json& o) {
      return o["product"].get<bool>() == (o["factors"][0].get<bool>() && o["factors"][1].get<bool>());
    });
    c.expect(1, "product_avoidance", json::object(), *obs, [](const json& o) {
      return o["product_ideals"].get<std::size_t>() ==
             o["factor_ideals"][0].get<std::size_t>() * o["factor_ideals"][1].get<std::size_t>();
    });
  };
  return def;
}

SuiteDef local_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"local-criterion", "local-reassembly", "bezout-equals-pir", "absolutely-flat-implies-avoidance",
             "chain-ring-implies-avoidance"};
  def.items = corpus.specs.size();
  def.run = [&corpus, &options](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.specs[i]), options.limits);
    if (!c.ok()) return;
    c.check(0, "theorem6", json::object(),
            [](const json& o) { return o["via_definition"] == o["via_local_criterion"]; });
    c.check(1, "reassembly", json::object(),
            [](const json& o) { return o["bijective"].get<bool>() && o["factors_local"].get<bool>(); });
    auto p = c.observe("ring_predicates", json::object());
    if (!p) return;
    c.expect(2, "ring_predicates", json::object(), *p, [](const json& o) { return o["bezout"] == o["pir"]; });
    if (!p->contains("error") && (*p)["absolutely_flat"].get<bool>())
      c.expect(3, "ring_predicates", json::object(), *p,
               [](const json& o) { return o["all_radical"].get<bool>() && o["avoidance"].get<bool>(); });
    if (!p->contains("error") && (*p)["chain_ring"].get<bool>())
      c.expect(4, "ring_predicates", json::object(), *p, [](const json& o) { return o["avoidance"].get<bool>(); });
  };
  return def;
}

SuiteDef modules_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"module-avoidance-iff-cyclic",  "faithful-multiplication-has-avoidance", "idealization-bridge",
             "idealization-cyclically-pure", "idealization-square-zero",              "residue-cover-size",
             "faithful-union-needs-unit"};
  auto items = std::make_shared<std::vector<ModuleSpec>>(corpus.modules);
  for (const auto& d : corpus.specs)
    if (const auto* i = std::get_if<Idealization>(&d.node)) items->push_back({*i->ring, i->module});
  def.items = items->size();
  def.notes.push_back("module coverage: " + std::to_string(items->size()) +
                      " (ring, module) pairs; statements about every finitely generated module are checked only "
                      "on these instances");
  def.run = [&corpus, &options, items](std::size_t i, ItemLog& log) {
    const auto& spec = (*items)[i];
    Checker c(log, to_json(spec.ring), options.limits);
    if (!c.ok()) return;
    Rng rng(item_seed(corpus, 5, i));
    const json margs = {{"module", to_json(spec.module)}};
    auto obs = c.observe("module", margs);
    if (!obs) return;
    const auto& o = *obs;
    c.expect(0, "module", margs, o, [](const json& p) { return p["has_avoidance"] == p["cyclic"]; });
    if (!o.contains("error") && o["faithful"].get<bool>() && o["multiplication_module"].get<bool>())
      c.expect(1, "module", margs, o, [](const json& p) { return p["has_avoidance"].get<bool>(); });
    c.expect(2, "module", margs, o, [](const json& p) { return p["bridge_has_avoidance"] == p["has_avoidance"]; });
    c.expect(3, "module", margs, o, [](const json& p) { return p["inclusion_cyclically_pure"].get<bool>(); });
    c.expect(4, "module", margs, o,
             [](const json& p) { return p["square_zero"].get<bool>() && p["retraction"].get<bool>(); });

    Module module;
    try {
      module = build_module(c.ctx().ring(), spec.module, options.limits);
    } catch (const Error& e) {
      if (e.is_resource_bound()) return;
      throw;
    }
    const auto& lattice = c.ctx().lattice();
    for (const auto& m : spectrum(lattice).maximals) {
      if (residue_dimension(module, m) < 2) continue;
      c.check(5, "lemma3", {{"module", margs["module"]}, {"maximal", gens_of(m)}}, [](const json& p) {
        return p["size"] == p["expected"] && p["all_proper"].get<bool>() && p["covers"].get<bool>();
      });
    }
    if (!o.contains("error") && o["faithful"].get<bool>()) {
      for (int t = 0; t < 3; ++t) {
        json ideals = json::array();
        const auto k = rng.between(1, 3);
        for (std::uint64_t s = 0; s < k; ++s) ideals.push_back(gens_of(lattice[rng.below(lattice.size())]));
        c.check(6, "lemma4", {{"module", margs["module"]}, {"ideals", ideals}},
                [](const json& p) { return !p["hypothesis_holds"].get<bool>() || !p["unit_index"].is_null(); });
      }
    }
  };
  return def;
}

SuiteDef graded_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"graded-avoidance-implies-pir", "graded-avoidance-implies-one-generator", "graded-classification",
             "minimal-generators-count", "minimal-generators-generate"};
  def.items = corpus.graded.size();
  def.run = [&corpus, &options](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.graded[i]), options.limits);
    if (!c.ok()) return;
    auto obs = c.observe("graded", json::object());
    if (!obs) return;
    const json none = json::object();
    const bool avoids = !obs->contains("error") && (*obs)["avoidance"].get<bool>();
    if (avoids || obs->contains("error")) {
      c.expect(0, "graded", none, *obs, [](const json& o) { return o["pir"].get<bool>(); });
      c.expect(1, "graded", none, *obs, [](const json& o) { return o["truncated_univariate"].get<bool>(); });
    }
    c.expect(2, "graded", none, *obs, [](const json& o) {
      return o["avoidance"].get<bool>() == (o["pir"].get<bool>() && o["truncated_univariate"].get<bool>());
    });
    c.expect(3, "graded", none, *obs, [](const json& o) {
      return o["generators"].size() == o["cotangent_dimension"].get<std::size_t>() &&
             o["cotangent_dimension"] == o["cotangent_by_size"];
    });
    c.expect(4, "graded", none, *obs,
             [](const json& o) { return o["generates"].get<bool>() && o["irredundant"].get<bool>(); });
  };
  return def;
}

json random_proper_ideal(Rng& rng, const Ring& ring, const Limits& limits) {
  const auto lattice = all_ideals(ring, limits);
  return gens_of(lattice[rng.below(lattice.size() - 1)]);
}

SuiteDef maps_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"surjection-every-ideal-extended", "quotient-transfer", "extension-contraction-inclusions",
             "identity-map-avoidance", "composite-monotonicity"};
  def.items = corpus.specs.size();
  const std::size_t quota =
      corpus.specs.empty() ? 0 : (options.composable_pairs + corpus.specs.size() - 1) / corpus.specs.size();
  def.run = [&corpus, &options, quota](std::size_t i, ItemLog& log) {
    const json ring_json = to_json(corpus.specs[i]);
    Checker c(log, ring_json, options.limits);
    if (!c.ok()) return;
    Rng rng(item_seed(corpus, 6, i));
    const Ring& ring = c.ctx().ring();
    const auto& lattice = c.ctx().lattice();
    const std::size_t bound = corpus.params.max_ring_size;

    c.check(3, "identity_map", json::object(), [](const json& o) { return o["map_avoidance"] == o["ring_avoidance"]; });

    std::vector<json> surjections;
    const std::size_t proper = lattice.size() - 1;
    const std::size_t take = std::min<std::size_t>(proper, 6);
    for (std::size_t s = 0; s < take; ++s)
      surjections.push_back(json::array({{{"step", "quotient"}, {"ideal", gens_of(lattice[s * proper / take])}}}));
    for (std::size_t r = 0; r < c.ctx().retractions().size(); ++r)
      surjections.push_back(json::array({{{"step", "retract"}, {"index", r}}}));
    for (const auto& steps : surjections) {
      const json args = {{"steps", steps}};
      auto obs = c.observe("surjection", args);
      if (!obs) continue;
      c.expect(0, "surjection", args, *obs,
               [](const json& o) { return o["surjective"].get<bool>() && o["every_ideal_extended"].get<bool>(); });
      c.expect(1, "surjection", args, *obs,
               [](const json& o) { return !o["source_avoidance"].get<bool>() || o["target_avoidance"].get<bool>(); });
      c.expect(2, "surjection", args, *obs, [](const json& o) { return o["galois"].get<bool>(); });
    }

    const auto monotone = [](const json& o) {
      return !o["phi_avoidance"].get<bool>() || o["composite_avoidance"].get<bool>();
    };
    for (std::size_t t = 0; t < quota; ++t) {
      json phi = json::array();
      switch (rng.below(5)) {
        case 0:
          phi.push_back({{"step", "identity"}});
          break;
        case 1:
          if (ring->size() * ring->size() <= bound) {
            phi.push_back({{"step", "diagonal"}});
            break;
          }
          [[fallthrough]];
        case 2:
          if (ring->size() * ring->size() <= bound) {
            phi.push_back({{"step", "idealize"}, {"rank", 1}});
            break;
          }
          [[fallthrough]];
        default:
          phi.push_back({{"step", "quotient"}, {"ideal", random_proper_ideal(rng, ring, options.limits)}});
          break;
      }
      std::optional<detail::MapChain> first;
      try {
        first = detail::apply_steps(ring, c.ctx().retractions(), phi, options.limits);
      } catch (const Error& e) {
        if (e.is_resource_bound()) continue;
        throw;
      }
      json psi = json::array();
      const auto choice = rng.below(3);
      if (choice == 0 && !first->retractions.empty()) {
        psi.push_back({{"step", "retract"}, {"index", rng.below(first->retractions.size())}});
      } else if (choice == 1) {
        psi.push_back(
            {{"step", "hom"}, {"target", to_json(desc::zmod(first->target->characteristic()))}, {"index", 0}});
      } else {
        psi.push_back({{"step", "quotient"}, {"ideal", random_proper_ideal(rng, first->target, options.limits)}});
      }
      const json args = {{"phi", phi}, {"psi", psi}};
      auto obs = c.observe("composite", args);
      if (!obs) continue;
      // Z/char is only a valid target when the prime subring is everything;
      // a missing homomorphism is an input limitation, not a finding.
      if (obs->contains("error") && (*obs)["error"] == "MalformedDescription" && choice == 1) continue;
      c.expect(4, "composite", args, *obs, monotone);
    }

    // Prime subring into R, then a quotient of R.
    const std::size_t ch = ring->characteristic();
    if (ch < ring->size()) {
      Checker z(log, to_json(desc::zmod(ch)), options.limits);
      if (z.ok()) {
        const json args = {{"phi", json::array({{{"step", "hom"}, {"target", ring_json}, {"index", 0}}})},
                           {"psi", json::array({{{"step", "quotient"},
                                                 {"ideal", random_proper_ideal(rng, ring, options.limits)}}})}};
        z.check(4, "composite", args, monotone);
      }
    }
  };
  return def;
}

SuiteDef primary_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"primary-avoidance-equivalence"};
  def.items = corpus.specs.size();
  def.run = [&corpus, &options](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.specs[i]), options.limits);
    if (!c.ok()) return;
    c.check(0, "primary_avoidance", json::object(),
            [](const json& o) { return o["avoidance"] == o["primary_avoidance"]; });
  };
  return def;
}

std::vector<RingDescription> probe_source_rings() {
  std::vector<RingDescription> out = golden_rings();
  for (std::uint64_t n : {2, 3, 4, 6, 8, 12}) out.push_back(desc::zmod(n));
  return out;
}

SuiteDef conjecture_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteDef def;
  def.ids = {"conjecture-probe"};
  def.asserting = {false};
  def.items = corpus.specs.size();
  def.notes.push_back("conjecture entries are exploratory: findings are recorded, never asserted");
  def.run = [&corpus, &options](std::size_t i, ItemLog& log) {
    Checker c(log, to_json(corpus.specs[i]), options.limits);
    if (!c.ok() || c.ctx().ring()->size() > 64) return;
    json from = json::array();
    for (const auto& d : probe_source_rings()) from.push_back(to_json(d));
    const json args = {{"from", from}, {"samples", options.probe_maps * 4}};
    auto obs = c.check(0, "conjecture", args, [](const json&) { return true; });
    if (obs) c.finding({{"kind", "conjecture-probe"}, {"ring", c.ctx().desc()}, {"report", *obs}});
  };
  return def;
}

SuiteDef make_suite(std::string_view id, const Corpus& corpus, const SuiteOptions& options) {
  if (id == "mccoy") return mccoy_suite(corpus, options);
  if (id == "avoidance-oracle") return avoidance_oracle(corpus, options);
  if (id == "products") return products_suite(corpus, options);
  if (id == "local-criterion") return local_suite(corpus, options);
  if (id == "modules") return modules_suite(corpus, options);
  if (id == "graded") return graded_suite(corpus, options);
  if (id == "maps") return maps_suite(corpus, options);
  if (id == "primary") return primary_suite(corpus, options);
  if (id == "conjecture") return conjecture_suite(corpus, options);
  fail(ErrorKind::UnknownSuite, "unknown suite '" + std::string(id) + "'");
}

}  // namespace

VerificationReport run_suite(const Corpus& corpus, std::string_view suite, const SuiteOptions& options) {
  if (suite != "all") return execute(std::string(suite), make_suite(suite, corpus, options), corpus, options);
  VerificationReport all;
  all.suite = "all";
  all.seed = corpus.seed;
  all.low_diversity = corpus.low_diversity;
  bool vacuous = true;
  for (const auto& id : suite_ids()) {
    if (id == "all") continue;
    auto part = execute(id, make_suite(id, corpus, options), corpus, options);
    vacuous = vacuous && part.vacuous;
    all.skipped += part.skipped;
    for (auto& e : part.entries) {
      e.theorem_id = id + "/" + e.theorem_id;
      all.entries.push_back(std::move(e));
    }
    for (auto& f : part.findings) all.findings.push_back(std::move(f));
    for (auto& n : part.notes)
      if (std::find(all.notes.begin(), all.notes.end(), n) == all.notes.end()) all.notes.push_back(std::move(n));
  }
  all.vacuous = vacuous;
  return all;
}

}  // namespace avoidance::harness
