#include "avoidance/harness/corpus.hpp"

#include <algorithm>

#include "avoidance/algebra.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/module.hpp"
#include "avoidance/serialize.hpp"

namespace avoidance::harness {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = gen_();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t Rng::log_uniform(std::uint64_t hi) {
  unsigned bits = 0;
  while (bits < 64 && (hi >> bits) != 0) ++bits;
  const unsigned b = static_cast<unsigned>(between(1, bits));
  const std::uint64_t lo = std::uint64_t{1} << (b - 1);
  const std::uint64_t top = b == 64 ? hi : std::min(hi, (std::uint64_t{1} << b) - 1);
  return between(lo, top);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<RingDescription> golden_rings() {
  return {desc::zmod(12), desc::poly_quotient(desc::gf(2), {"x", "y"}, 2),
          desc::poly_quotient(desc::gf(2), {"x"}, 3), desc::product({desc::gf(2), desc::gf(3)}),
          desc::poly_quotient(desc::gf(3), {"x", "y"}, 2)};
}

std::vector<ModuleSpec> golden_modules() {
  return {{desc::gf(2), desc::free_module(2)},
          {desc::gf(3), desc::free_module(2)},
          {desc::gf(2, 2), desc::free_module(2)},
          {desc::zmod(12), desc::residue_power({"2"}, 2)},
          {desc::zmod(4), desc::free_module(1)}};
}

std::vector<RingDescription> golden_graded() {
  return {desc::graded(desc::gf(2), {{"x", 1}, {"y", 1}}, 2), desc::graded(desc::gf(2), {{"x", 1}}, 3),
          desc::graded(desc::gf(2), {{"x", 1}}, 4), desc::graded(desc::gf(3), {{"x", 1}, {"y", 1}}, 2),
          desc::graded(desc::gf(3), {{"x", 1}, {"y", 1}}, 3, {"x*y"})};
}

namespace {

struct Sized {
  RingDescription desc;
  std::size_t size = 0;
};

const std::vector<std::string> kVarNames = {"x", "y", "z"};

RingDescription small_field(std::uint64_t q) { return q == 4 ? desc::gf(2, 2) : desc::gf(q); }

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    out *= base;
    if (out > (std::size_t{1} << 40)) return out;
  }
  return out;
}

std::string monomial_text(const std::vector<unsigned>& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

/// Monomials of weighted degree exactly d that are not a lone variable.
std::vector<std::vector<unsigned>> nonlinear_monomials(const std::vector<unsigned>& weights, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned deg) -> void {
    if (v == weights.size()) {
      unsigned total = 0;
      for (auto e : cur) total += e;
      if (deg == d && total >= 2) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; deg + e * weights[v] <= d; ++e) {
      cur[v] = e;
      self(self, v + 1, deg + e * weights[v]);
    }
    cur[v] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

/// A random homogeneous polynomial of weighted degree d; empty when every
/// drawn coefficient is zero.
std::string random_relation(Rng& rng, const FiniteRing& field, const std::vector<std::string>& vars,
                            const std::vector<unsigned>& weights, unsigned d) {
  std::string out;
  for (const auto& mono : nonlinear_monomials(weights, d)) {
    const auto c = static_cast<Elem>(rng.below(field.size()));
    if (c == field.zero()) continue;
    if (!out.empty()) out += " + ";
    if (c != field.one()) {
      const auto& name = field.name(c);
      const bool numeric = name.find_first_not_of("0123456789") == std::string::npos;
      out += (numeric ? name : "(" + name + ")") + "*";
    }
    out += monomial_text(mono, vars);
  }
  return out;
}

/// Exact dimension of the truncated quotient, without building tables.
std::size_t quotient_dimension(const Ring& field, const std::vector<std::string>& vars,
                               const std::vector<unsigned>& weights, unsigned truncation,
                               const std::vector<std::string>& relations) {
  std::vector<std::vector<PolyTerm>> parsed;
  for (const auto& r : relations) parsed.push_back(parse_polynomial(r, vars, *field));
  return truncated_quotient(field, vars, weights, truncation, parsed).dim();
}

Sized random_poly_quotient(Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t q = rng.between(2, 4);
    const auto nvars = static_cast<std::size_t>(rng.between(1, 3));
    const auto truncation = static_cast<unsigned>(rng.between(2, 3));
    std::vector<std::string> vars(kVarNames.begin(), kVarNames.begin() + static_cast<std::ptrdiff_t>(nvars));
    std::vector<unsigned> weights(nvars, 1);
    std::vector<std::string> relations;
    const Ring field = build_ring(small_field(q));
    if (truncation == 3) {
      const auto count = rng.between(0, nonlinear_monomials(weights, 2).size());
      for (std::uint64_t i = 0; i < count; ++i) {
        auto rel = random_relation(rng, *field, vars, weights, 2);
        if (!rel.empty()) relations.push_back(std::move(rel));
      }
    }
    const auto size = power(q, quotient_dimension(field, vars, weights, truncation, relations));
    if (size >= 2 && size <= max_size)
      return {desc::poly_quotient(small_field(q), vars, truncation, relations), size};
  }
  return {desc::poly_quotient(desc::gf(2), {"x"}, 2), 4};
}

Sized random_zmod(Rng& rng, std::size_t max_size, std::size_t cap = 64) {
  const auto n = rng.between(2, std::max<std::size_t>(2, std::min(max_size, cap)));
  return {desc::zmod(n), static_cast<std::size_t>(n)};
}

/// A ring of at most max_size (>= 2) elements for use as a factor or base.
/// Without allow_poly only Z/n and fields are drawn, so every result is a PIR.
Sized random_small_ring(Rng& rng, std::size_t max_size, bool allow_poly = true) {
  switch (rng.below(allow_poly ? 3 : 2)) {
    case 0:
      return random_zmod(rng, max_size, 16);
    case 1: {
      std::vector<std::uint64_t> qs;
      for (std::uint64_t q : {2, 3, 4, 5})
        if (q <= max_size) qs.push_back(q);
      const auto q = rng.pick(qs);
      return {small_field(q), static_cast<std::size_t>(q)};
    }
    default:
      if (max_size < 4) return random_zmod(rng, max_size, 16);
      return random_poly_quotient(rng, std::min<std::size_t>(max_size, 64));
  }
}

Sized random_product(Rng& rng, std::size_t max_size, bool allow_poly = true) {
  const std::size_t factors = max_size >= 8 ? static_cast<std::size_t>(rng.between(2, 3)) : 2;
  std::vector<RingDescription> descs;
  std::size_t size = 1;
  for (std::size_t i = 0; i < factors; ++i) {
    const std::size_t left = factors - i - 1;
    const std::size_t budget = max_size / size / power(2, left);
    if (budget < 2) break;
    auto f = random_small_ring(rng, budget, allow_poly);
    size *= f.size;
    descs.push_back(std::move(f.desc));
  }
  if (descs.size() < 2) return random_zmod(rng, max_size);
  return {desc::product(std::move(descs)), size};
}

std::optional<ModuleDescription> random_module(Rng& rng, const Ring& ring, std::size_t max_module_size) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    ModuleDescription d;
    switch (rng.below(3)) {
      case 0:
        d = desc::free_module(static_cast<unsigned>(rng.between(0, 2)));
        break;
      case 1: {
        const auto lattice = all_ideals(ring);
        const auto spec = spectrum(lattice);
        const auto& m = rng.pick(spec.maximals);
        std::vector<std::string> gens;
        for (Elem g : small_generating_set(m)) gens.push_back(ring->name(g));
        if (gens.empty()) gens.push_back(ring->name(ring->zero()));
        d = desc::residue_power(std::move(gens), static_cast<unsigned>(rng.between(1, 2)));
        break;
      }
      default: {
        const auto rank = static_cast<unsigned>(rng.between(1, 2));
        const Module free = build_module(ring, desc::free_module(rank));
        if (free->size() > 4096) continue;
        const auto g = static_cast<Elem>(rng.below(free->size()));
        d = desc::module_quotient(desc::free_module(rank), {free->name(g)});
        break;
      }
    }
    try {
      if (build_module(ring, d)->size() <= max_module_size) return d;
    } catch (const Error& e) {
      if (!e.is_resource_bound()) throw;
    }
  }
  return std::nullopt;
}

Sized random_idealization(Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto base = random_small_ring(rng, std::max<std::size_t>(2, max_size / 2));
    const Ring ring = build_ring(base.desc);
    auto module = random_module(rng, ring, max_size / base.size);
    if (!module) continue;
    const auto msize = build_module(ring, *module)->size();
    return {desc::idealization(base.desc, *module), base.size * msize};
  }
  return {desc::idealization(desc::gf(2), desc::free_module(1)), 4};
}

Sized random_quotient(Rng& rng, std::size_t max_size, bool allow_poly = true) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Sized inner;
    switch (rng.below(3)) {
      case 0:
        inner = random_zmod(rng, max_size);
        break;
      case 1:
        inner = allow_poly ? random_poly_quotient(rng, max_size) : random_zmod(rng, max_size);
        break;
      default:
        inner = random_product(rng, max_size, allow_poly);
        break;
    }
    const Ring ring = build_ring(inner.desc);
    std::vector<Elem> gens;
    const auto count = rng.between(1, 2);
    for (std::uint64_t i = 0; i < count; ++i) gens.push_back(static_cast<Elem>(rng.below(ring->size())));
    const Ideal ideal = ideal_generated(ring, gens);
    if (ideal.is_unit()) continue;
    std::vector<std::string> names;
    for (Elem g : gens) names.push_back(ring->name(g));
    return {desc::quotient(inner.desc, std::move(names)), ring->size() / ideal.size()};
  }
  return random_zmod(rng, max_size);
}

RingDescription random_graded(Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t q = rng.between(2, 4);
    const Ring field = build_ring(small_field(q));
    const auto nvars = static_cast<std::size_t>(rng.chance(1, 3) ? 1 : rng.between(2, 3));
    std::vector<GradedVar> vars;
    std::vector<std::string> names;
    std::vector<unsigned> weights;
    for (std::size_t i = 0; i < nvars; ++i) {
      const auto w = static_cast<unsigned>(rng.chance(1, 4) ? 2 : 1);
      vars.push_back({kVarNames[i], w});
      names.push_back(kVarNames[i]);
      weights.push_back(w);
    }
    const auto truncation = static_cast<unsigned>(rng.between(2, nvars == 1 ? 6 : 4));
    std::vector<std::string> relations;
    if (truncation >= 3) {
      const auto count = rng.between(0, 2);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto d = static_cast<unsigned>(rng.between(2, truncation - 1));
        auto rel = random_relation(rng, *field, names, weights, d);
        if (!rel.empty()) relations.push_back(std::move(rel));
      }
    }
    const auto size = power(q, quotient_dimension(field, names, weights, truncation, relations));
    if (size <= max_size) return desc::graded(small_field(q), std::move(vars), truncation, std::move(relations));
  }
  return desc::graded(desc::gf(2), {{"x", 1}}, 2);
}

}  // namespace

Corpus generate_corpus(std::uint64_t seed, const CorpusParams& params) {
  const Limits global = Limits::from_environment();
  if (params.max_ring_size > global.max_ring_size)
    fail(ErrorKind::SizeBound, "corpus max ring size " + std::to_string(params.max_ring_size) +
                                   " exceeds the global bound " + std::to_string(global.max_ring_size));
  if (params.max_ring_size < 4) fail(ErrorKind::MalformedDescription, "corpus max ring size must be at least 4");

  Corpus c;
  c.seed = seed;
  c.params = params;
  c.low_diversity = params.mix.poly_quotient == 0;
  const auto& mix = params.mix;
  const std::size_t modules = params.module_count < 0 ? params.count / 2 : static_cast<std::size_t>(params.module_count);
  const std::size_t graded = params.graded_count < 0 ? params.count / 2 : static_cast<std::size_t>(params.graded_count);
  c.provenance = {{"seed", seed},
                  {"max_ring_size", params.max_ring_size},
                  {"count", params.count},
                  {"module_count", modules},
                  {"graded_count", graded},
                  {"mix",
                   {{"zmod", mix.zmod},
                    {"product", mix.product},
                    {"poly_quotient", mix.poly_quotient},
                    {"quotient", mix.quotient},
                    {"idealization", mix.idealization}}}};

  for (auto& d : golden_rings()) c.specs.push_back(std::move(d));
  const std::vector<unsigned> weights = {mix.zmod, mix.product, mix.poly_quotient, mix.quotient, mix.idealization};
  unsigned total = 0;
  for (auto w : weights) total += w;
  if (total == 0 && params.count > 0) fail(ErrorKind::MalformedDescription, "constructor mix has no weight");

  const bool poly = mix.poly_quotient > 0;
  Rng rings(derive_seed(seed, 0));
  for (std::size_t i = 0; i < params.count; ++i) {
    auto r = rings.below(total);
    std::size_t kind = 0;
    while (r >= weights[kind]) r -= weights[kind++];
    const std::size_t max = params.max_ring_size;
    switch (kind) {
      case 0: c.specs.push_back(random_zmod(rings, max, max).desc); break;
      case 1: c.specs.push_back(random_product(rings, max, poly).desc); break;
      case 2: c.specs.push_back(random_poly_quotient(rings, max).desc); break;
      case 3: c.specs.push_back(random_quotient(rings, max, poly).desc); break;
      default: c.specs.push_back(random_idealization(rings, max).desc); break;
    }
  }

  for (auto& m : golden_modules()) c.modules.push_back(std::move(m));
  Rng mods(derive_seed(seed, 1));
  while (c.modules.size() < golden_modules().size() + modules) {
    auto base = random_small_ring(mods, std::min<std::size_t>(params.max_ring_size / 2, 32));
    auto module = random_module(mods, build_ring(base.desc), params.max_ring_size / base.size);
    if (module) c.modules.push_back({std::move(base.desc), std::move(*module)});
  }

  for (auto& g : golden_graded()) c.graded.push_back(std::move(g));
  Rng grad(derive_seed(seed, 2));
  for (std::size_t i = 0; i < graded; ++i) c.graded.push_back(random_graded(grad, params.max_ring_size));
  return c;
}

nlohmann::json to_json(const Corpus& corpus) {
  nlohmann::json out;
  out["seed"] = corpus.seed;
  out["provenance"] = corpus.provenance;
  out["low_diversity"] = corpus.low_diversity;
  auto& specs = out["specs"] = nlohmann::json::array();
  for (const auto& d : corpus.specs) specs.push_back(to_json(d));
  auto& modules = out["modules"] = nlohmann::json::array();
  for (const auto& m : corpus.modules) modules.push_back({{"ring", to_json(m.ring)}, {"module", to_json(m.module)}});
  auto& graded = out["graded"] = nlohmann::json::array();
  for (const auto& d : corpus.graded) graded.push_back(to_json(d));
  return out;
}

}  // namespace avoidance::harness
