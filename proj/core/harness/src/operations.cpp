#include "operations.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/graded.hpp"
#include "avoidance/harness/suites.hpp"
#include "avoidance/maps.hpp"
#include "avoidance/module.hpp"
#include "avoidance/serialize.hpp"
#include "avoidance/structure.hpp"

namespace avoidance::harness::detail {

Context::Context(json desc, const Limits& limits) : desc_json_(std::move(desc)), limits_(limits) {
  const auto d = ring_description_from_json(desc_json_);
  if (const auto* p = std::get_if<Product>(&d.node)) {
    std::vector<Ring> factors;
    for (const auto& f : p->factors) factors.push_back(build_ring(f, limits_));
    auto built = product_ring(factors, limits_);
    ring_ = built.ring;
    retractions_ = std::move(built.projections);
  } else if (const auto* i = std::get_if<Idealization>(&d.node)) {
    if (!i->ring) fail(ErrorKind::MalformedDescription, "idealization needs a ring");
    const Ring base = build_ring(*i->ring, limits_);
    auto built = idealization(build_module(base, i->module, limits_), limits_);
    ring_ = built.ring;
    retractions_.push_back(built.projection);
  } else {
    ring_ = build_ring(d, limits_);
  }
}

const IdealLattice& Context::lattice() {
  if (!lattice_) lattice_ = std::make_unique<IdealLattice>(all_ideals(ring_, limits_));
  return *lattice_;
}

Ideal Context::ideal(const json& generators) const {
  std::vector<Elem> gens;
  for (const auto& g : generators) gens.push_back(ring_->parse_element(g.get<std::string>()));
  return ideal_generated(ring_, gens);
}

json Context::generators(const Ideal& ideal) const {
  json out = json::array();
  for (Elem g : small_generating_set(ideal)) out.push_back(ring_->name(g));
  return out;
}

namespace {

std::vector<Ideal> ideal_list(const Context& ctx, const json& list) {
  std::vector<Ideal> out;
  for (const auto& gens : list) out.push_back(ctx.ideal(gens));
  return out;
}

CoverFamily family_of(const Context& ctx, const json& args) {
  return CoverFamily{ctx.ideal(args.at("target")), ideal_list(ctx, args.at("members"))};
}

json labels(const std::vector<Ideal>& ideals) {
  json out = json::array();
  for (const auto& i : ideals) out.push_back(ideal_label(i));
  return out;
}

bool is_pure(const Ideal& a) {
  const auto& r = a.r();
  const auto members = a.members().to_vector();
  return std::all_of(members.begin(), members.end(), [&](Elem x) {
    return std::any_of(members.begin(), members.end(), [&](Elem b) { return r.mul(x, b) == x; });
  });
}

bool generated_by_idempotent(const Ideal& a) {
  const auto& r = a.r();
  const auto members = a.members().to_vector();
  return std::any_of(members.begin(), members.end(), [&](Elem e) {
    return r.mul(e, e) == e && principal_ideal(a.ring(), e) == a;
  });
}

bool galois_inclusions(const RingMap& phi, const IdealLattice& source, const IdealLattice& target) {
  for (const auto& i : source)
    if (!i.is_subset_of(contract_ideal(phi, extend_ideal(phi, i)))) return false;
  for (const auto& j : target)
    if (!extend_ideal(phi, contract_ideal(phi, j)).is_subset_of(j)) return false;
  return true;
}

json op_ideal_properties(Context& ctx, const json& args) {
  const Ideal a = ctx.ideal(args.at("ideal"));
  const auto& lattice = ctx.lattice();
  const bool idempotent = ideal_product(a, a) == a;
  const Ideal rad = radical(a);
  bool radical_powers = true;
  for (unsigned d = 1; d <= 4; ++d) radical_powers = radical_powers && radical(ideal_power(a, d)) == rad;
  const bool primary = is_primary(a);
  return {{"principal", is_principal(a)},
          {"has_avoidance", has_avoidance(a, lattice)},
          {"idempotent", idempotent},
          {"pure", is_pure(a)},
          {"idempotent_generator", idempotent && generated_by_idempotent(a)},
          {"radical", rad == a},
          {"radical_powers_agree", radical_powers},
          {"primary", primary},
          {"primary_radical_prime", !primary || is_prime(rad)}};
}

json op_ring_avoidance(Context& ctx, const json&) {
  const auto& lattice = ctx.lattice();
  return {{"avoidance", is_avoidance_ring(lattice)},
          {"all_principal", std::all_of(lattice.begin(), lattice.end(), [](const Ideal& i) { return is_principal(i); })},
          {"ideals", lattice.size()}};
}

json op_min_cover(Context& ctx, const json& args) {
  const Ideal a = ctx.ideal(args.at("ideal"));
  const auto cover = min_cover(a, ctx.lattice());
  if (!cover) return {{"size", nullptr}};
  return {{"size", cover->size}, {"members", labels(cover->family.members)}, {"certified_minimal", cover->certified_minimal}};
}

json op_mccoy(Context& ctx, const json& args) {
  const auto family = family_of(ctx, args);
  auto out = to_json(mccoy(family));
  out["n"] = family.n();
  out["irredundant"] = is_irredundant(family);
  return out;
}

json op_containing_member(Context& ctx, const json& args) {
  const auto family = family_of(ctx, args);
  for (std::size_t k = 0; k < family.members.size(); ++k)
    if (family.target.is_subset_of(family.members[k])) return {{"index", k}};
  return {{"index", nullptr}};
}

json op_radical_variant(Context& ctx, const json& args) {
  return {{"index", radical_variant_check(family_of(ctx, args))}};
}

json op_theorem6(Context& ctx, const json&) {
  const auto t = theorem6_check(ctx.ring(), ctx.limits());
  return {{"via_definition", t.via_definition}, {"via_local_criterion", t.via_local_criterion}};
}

json op_reassembly(Context& ctx, const json&) {
  const auto d = local_decomposition(ctx.ring(), ctx.limits());
  const auto r = reassemble(d, ctx.limits());
  json sizes = json::array();
  for (const auto& f : d.factors) sizes.push_back(f.ring->size());
  bool local = true;
  for (const auto& f : d.factors) local = local && spectrum(f.ring).maximals.size() == 1;
  return {{"factors", sizes},
          {"bijective", r.combined.is_injective() && r.combined.is_surjective()},
          {"factors_local", local}};
}

json op_ring_predicates(Context& ctx, const json&) {
  const auto& lattice = ctx.lattice();
  const auto p = ring_predicates(lattice);
  return {{"local", p.local},
          {"pir", p.pir},
          {"bezout", p.bezout},
          {"absolutely_flat", p.absolutely_flat},
          {"chain_ring", p.chain_ring},
          {"avoidance", is_avoidance_ring(lattice)},
          {"all_radical", std::all_of(lattice.begin(), lattice.end(), [](const Ideal& i) { return is_radical(i); })}};
}

json op_primary_avoidance(Context& ctx, const json&) {
  const auto p = primary_avoidance_equiv(ctx.lattice());
  return {{"avoidance", p.avoidance}, {"primary_avoidance", p.primary_avoidance}};
}

json op_product_avoidance(Context& ctx, const json&) {
  if (ctx.retractions().size() < 2) fail(ErrorKind::MalformedDescription, "product_avoidance needs a product ring");
  json factors = json::array(), counts = json::array();
  for (const auto& pi : ctx.retractions()) {
    const auto lattice = all_ideals(pi.target(), ctx.limits());
    factors.push_back(is_avoidance_ring(lattice));
    counts.push_back(lattice.size());
  }
  return {{"product", is_avoidance_ring(ctx.lattice())},
          {"factors", factors},
          {"product_ideals", ctx.lattice().size()},
          {"factor_ideals", counts}};
}

json op_identity_map(Context& ctx, const json&) {
  return {{"map_avoidance", map_has_avoidance(RingMap::identity(ctx.ring()), ctx.lattice())},
          {"ring_avoidance", is_avoidance_ring(ctx.lattice())}};
}

json op_surjection(Context& ctx, const json& args) {
  const auto chain = apply_steps(ctx.ring(), ctx.retractions(), args.at("steps"), ctx.limits());
  const auto& source = ctx.lattice();
  const auto target = all_ideals(chain.target, ctx.limits());
  const auto p = map_predicates(chain.map, source, target);
  return {{"surjective", p.surjective},
          {"every_ideal_extended", p.every_ideal_extended},
          {"source_avoidance", is_avoidance_ring(source)},
          {"target_avoidance", is_avoidance_ring(target)},
          {"galois", galois_inclusions(chain.map, source, target)}};
}

json op_composite(Context& ctx, const json& args) {
  const auto phi = apply_steps(ctx.ring(), ctx.retractions(), args.at("phi"), ctx.limits());
  const auto psi = apply_steps(phi.target, phi.retractions, args.at("psi"), ctx.limits());
  const auto composite = RingMap::compose(psi.map, phi.map);
  return {{"phi_avoidance", map_has_avoidance(phi.map, ctx.lattice())},
          {"composite_avoidance", map_has_avoidance(composite, ctx.lattice())}};
}

json op_module(Context& ctx, const json& args) {
  const Module module = build_module(ctx.ring(), module_description_from_json(args.at("module")), ctx.limits());
  const auto p = module_predicates(module, ctx.limits());
  const auto ideal = idealization(module, ctx.limits());
  const auto big = all_ideals(ideal.ring, ctx.limits());
  const Ideal square = ideal_product(ideal.module_ideal, ideal.module_ideal);
  const auto round_trip = RingMap::compose(ideal.projection, ideal.inclusion);
  return {{"cyclic", p.cyclic},
          {"faithful", p.faithful},
          {"has_avoidance", p.has_avoidance},
          {"multiplication_module", p.multiplication_module},
          {"min_cover_size", p.min_cover_size ? json(*p.min_cover_size) : json(nullptr)},
          {"bridge_has_avoidance", has_avoidance(ideal.module_ideal, big)},
          {"inclusion_cyclically_pure", is_cyclically_pure(ideal.inclusion, ctx.lattice())},
          {"square_zero", square.is_zero()},
          {"retraction", round_trip.image() == RingMap::identity(ctx.ring()).image()}};
}

json op_lemma3(Context& ctx, const json& args) {
  const Module module = build_module(ctx.ring(), module_description_from_json(args.at("module")), ctx.limits());
  const Ideal m = ctx.ideal(args.at("maximal"));
  const auto family = lemma3_cover(module, m, ctx.limits());
  ElementSet united(module->size());
  bool proper = true;
  for (const auto& s : family) {
    united |= s.members();
    proper = proper && s.size() < module->size();
  }
  return {{"size", family.size()},
          {"expected", ctx.ring()->size() / m.size() + 1},
          {"all_proper", proper},
          {"covers", united.count() == module->size()}};
}

json op_lemma4(Context& ctx, const json& args) {
  const Module module = build_module(ctx.ring(), module_description_from_json(args.at("module")), ctx.limits());
  const auto v = lemma4_check(module, ideal_list(ctx, args.at("ideals")));
  return {{"hypothesis_holds", v.hypothesis_holds}, {"unit_index", v.unit_index ? json(*v.unit_index) : json(nullptr)}};
}

json op_graded(Context& ctx, const json&) {
  const auto d = ring_description_from_json(ctx.desc());
  const auto* g = std::get_if<Graded>(&d.node);
  if (!g) fail(ErrorKind::MalformedDescription, "graded operation needs a graded description");
  const auto algebra = build_graded(*g, ctx.limits());
  const auto c = graded_avoidance_classify(algebra, ctx.limits());
  const auto gens = minimal_generators(algebra);

  // dim m/m^2 from ideal sizes in the local ring.
  const auto& ring = algebra.ring;
  const auto maximals = spectrum(all_ideals(ring, ctx.limits())).maximals;
  const Ideal& m = maximals.front();
  std::size_t ratio = m.size() / ideal_product(m, m).size(), by_size = 0;
  while (ratio > 1) {
    ratio /= algebra.field->size();
    ++by_size;
  }

  // Scalars K * 1 together with the generators must give the whole algebra,
  // and no generator may be dropped.
  std::vector<Elem> scalars;
  for (Elem c0 = 0; c0 < algebra.field->size(); ++c0) {
    Vector v(algebra.dim(), algebra.field->zero());
    for (std::size_t i = 0; i < algebra.dim(); ++i) v[i] = algebra.field->mul(c0, algebra.presentation.unit[i]);
    scalars.push_back(algebra_element(algebra.field->size(), v));
  }
  auto spans = [&](const std::vector<Elem>& g0) {
    auto all = scalars;
    all.insert(all.end(), g0.begin(), g0.end());
    return subring_generated(ring, all).ring->size() == ring->size();
  };
  bool irredundant = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto fewer = gens;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    irredundant = irredundant && !spans(fewer);
  }
  json names = json::array();
  for (Elem e : gens) names.push_back(ring->name(e));
  return {{"avoidance", c.avoidance},
          {"pir", c.pir},
          {"truncated_univariate", c.truncated_univariate},
          {"generators", names},
          {"cotangent_dimension", cotangent_dimension(algebra)},
          {"cotangent_by_size", by_size},
          {"generates", spans(gens)},
          {"irredundant", irredundant}};
}

json op_conjecture(Context& ctx, const json& args) {
  std::vector<RingDescription> from;
  for (const auto& d : args.at("from")) from.push_back(ring_description_from_json(d));
  const auto sources = conjecture_sources(ctx.ring(), from, args.at("samples").get<std::size_t>(), ctx.limits());
  return to_json(conjecture_probe(ctx.ring(), sources, ctx.limits()));
}

using Op = std::function<json(Context&, const json&)>;

const std::map<std::string, Op>& operations() {
  static const std::map<std::string, Op> ops = {
      {"ideal_properties", op_ideal_properties},
      {"ring_avoidance", op_ring_avoidance},
      {"min_cover", op_min_cover},
      {"mccoy", op_mccoy},
      {"containing_member", op_containing_member},
      {"radical_variant", op_radical_variant},
      {"theorem6", op_theorem6},
      {"reassembly", op_reassembly},
      {"ring_predicates", op_ring_predicates},
      {"primary_avoidance", op_primary_avoidance},
      {"product_avoidance", op_product_avoidance},
      {"identity_map", op_identity_map},
      {"surjection", op_surjection},
      {"composite", op_composite},
      {"module", op_module},
      {"lemma3", op_lemma3},
      {"lemma4", op_lemma4},
      {"graded", op_graded},
      {"conjecture", op_conjecture},
  };
  return ops;
}

}  // namespace

json evaluate(Context& ctx, const std::string& operation, const json& args) {
  const auto& ops = operations();
  const auto it = ops.find(operation);
  if (it == ops.end()) fail(ErrorKind::MalformedDescription, "unknown operation '" + operation + "'");
  try {
    return it->second(ctx, args);
  } catch (const Error& e) {
    if (e.is_resource_bound()) throw;
    return {{"error", to_string(e.kind())}, {"detail", e.what()}};
  }
}

MapChain apply_steps(const Ring& start, const std::vector<RingMap>& retractions, const json& steps,
                     const Limits& limits) {
  MapChain chain{RingMap::identity(start), start, retractions};
  for (const auto& step : steps) {
    const auto kind = step.at("step").get<std::string>();
    std::optional<RingMap> next;
    std::vector<RingMap> next_retractions;
    const Ring& here = chain.target;
    if (kind == "identity") {
      next = RingMap::identity(here);
      next_retractions = chain.retractions;
    } else if (kind == "quotient") {
      std::vector<Elem> gens;
      for (const auto& g : step.at("ideal")) gens.push_back(here->parse_element(g.get<std::string>()));
      next = quotient_ring(ideal_generated(here, gens), limits).projection;
    } else if (kind == "diagonal") {
      auto prod = product_ring({here, here}, limits);
      std::vector<Elem> image(here->size());
      for (Elem x = 0; x < here->size(); ++x) image[x] = static_cast<Elem>(x * here->size() + x);
      next = RingMap(here, prod.ring, std::move(image));
      next_retractions = std::move(prod.projections);
    } else if (kind == "idealize") {
      const auto rank = step.value("rank", 1u);
      auto big = idealization(build_module(here, desc::free_module(rank), limits), limits);
      next = big.inclusion;
      next_retractions.push_back(big.projection);
    } else if (kind == "retract") {
      const auto index = step.at("index").get<std::size_t>();
      if (index >= chain.retractions.size()) fail(ErrorKind::MalformedDescription, "no such retraction");
      next = chain.retractions[index];
    } else if (kind == "hom") {
      const Ring target = build_ring(ring_description_from_json(step.at("target")), limits);
      const auto index = step.at("index").get<std::size_t>();
      auto homs = enumerate_homomorphisms(here, target, index + 1);
      if (homs.size() <= index) fail(ErrorKind::MalformedDescription, "no such homomorphism");
      next = homs[index];
    } else {
      fail(ErrorKind::MalformedDescription, "unknown map step '" + kind + "'");
    }
    chain.map = RingMap::compose(*next, chain.map);
    chain.target = next->target();
    chain.retractions = std::move(next_retractions);
  }
  return chain;
}

}  // namespace avoidance::harness::detail
