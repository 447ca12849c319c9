#include "avoidance/builder.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "avoidance/algebra.hpp"
#include "avoidance/error.hpp"
#include "avoidance/graded.hpp"

namespace avoidance {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_size(std::size_t n, const Limits& limits) {
  if (n > limits.max_ring_size)
    fail(ErrorKind::SizeBound,
         "ring of " + std::to_string(n) + " elements exceeds bound " + std::to_string(limits.max_ring_size));
}

Ring build_zmod(std::uint64_t n, const Limits& limits) {
  if (n == 0) fail(ErrorKind::MalformedDescription, "Z/0 is infinite; use the integers backend");
  if (n == 1) fail(ErrorKind::OneEqualsZero, "Z/1 is the zero ring");
  check_size(n, limits);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  std::vector<std::string> names(n);
  for (std::uint64_t a = 0; a < n; ++a) names[a] = std::to_string(a);
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, 1, std::move(names), desc::zmod(n), limits);
}

using ZpPoly = std::vector<std::uint64_t>;  // constant term first

/// Remainder of a by monic b over Z/p.
ZpPoly poly_mod(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    a.pop_back();
  }
  return a;
}

bool poly_irreducible(const ZpPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d * 2 <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      ZpPoly g(d + 1, 0);
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      const auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

ZpPoly default_modulus(std::uint64_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    ZpPoly f(k + 1, 0);
    std::uint64_t v = t;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  fail(ErrorKind::EngineBug, "no irreducible polynomial found");
}

Ring build_gf(const GaloisField& gf, const RingDescription& desc, const Limits& limits) {
  if (!is_prime(gf.p)) fail(ErrorKind::MalformedDescription, "GF characteristic " + std::to_string(gf.p) + " is not prime");
  if (gf.k == 0) fail(ErrorKind::MalformedDescription, "GF degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < gf.k; ++i) {
    q *= gf.p;
    check_size(q, limits);
  }
  ZpPoly modulus;
  if (gf.modulus.empty()) {
    modulus = default_modulus(gf.p, gf.k);
  } else {
    if (gf.modulus.size() != gf.k + 1)
      fail(ErrorKind::MalformedDescription, "modulus must have k+1 coefficients, constant term first");
    const auto p = static_cast<std::int64_t>(gf.p);
    for (auto c : gf.modulus) modulus.push_back(static_cast<std::uint64_t>(((c % p) + p) % p));
    if (modulus.back() != 1) fail(ErrorKind::MalformedDescription, "modulus must be monic");
  }
  const Ring prime = build_zmod(gf.p, limits);
  AlgebraPresentation alg;
  alg.field = prime;
  const unsigned k = gf.k;
  for (unsigned i = 0; i < k; ++i) {
    alg.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i)));
    alg.basis_degrees.push_back(i);
  }
  alg.structure.resize(std::size_t{k} * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      ZpPoly mono(i + j + 1, 0);
      mono[i + j] = 1;
      auto r = poly_mod(mono, modulus, gf.p);
      r.resize(k, 0);
      Vector v(k);
      for (unsigned t = 0; t < k; ++t) v[t] = static_cast<Elem>(r[t]);
      alg.structure[i * k + j] = v;
    }
  alg.unit = Vector(k, 0);
  alg.unit[0] = 1;
  const Ring field = algebra_ring(alg, desc, limits);
  if (!field->is_field()) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(gf.p));
  return field;
}

void check_vars(const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      fail(ErrorKind::MalformedDescription, "invalid variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        fail(ErrorKind::MalformedDescription, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorKind::MalformedDescription, "duplicate variable '" + v + "'");
  }
}

Ring build_poly_quotient(const PolyQuotient& pq, const RingDescription& desc, const Limits& limits) {
  if (!pq.base) fail(ErrorKind::MalformedDescription, "poly_quotient needs a base field");
  const Ring base = build_ring(*pq.base, limits);
  if (!base->is_field()) fail(ErrorKind::NotAField, "poly_quotient base ring is not a field");
  check_vars(pq.vars);
  if (pq.truncation == 0) fail(ErrorKind::MalformedDescription, "truncation must be at least 1");
  std::vector<std::vector<PolyTerm>> relations;
  for (const auto& text : pq.relations) {
    auto terms = parse_polynomial(text, pq.vars, *base);
    for (const auto& t : terms) {
      unsigned d = 0;
      for (auto e : t.exponents) d += e;
      if (d >= pq.truncation)
        fail(ErrorKind::MalformedDescription, "relation '" + text + "' has a term of degree >= truncation");
    }
    relations.push_back(std::move(terms));
  }
  const auto alg = truncated_quotient(base, pq.vars, std::vector<unsigned>(pq.vars.size(), 1), pq.truncation, relations);
  return algebra_ring(alg, desc, limits);
}

ProductRing product_with_desc(const std::vector<Ring>& factors, RingDescription desc, const Limits& limits) {
  if (factors.size() < 2) fail(ErrorKind::MalformedDescription, "a product needs at least two factors");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->size();
    check_size(n, limits);
  }
  const std::size_t m = factors.size();
  std::vector<std::vector<Elem>> tuple(n, std::vector<Elem>(m));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t v = idx;
    for (std::size_t i = m; i-- > 0;) {
      tuple[idx][i] = static_cast<Elem>(v % factors[i]->size());
      v /= factors[i]->size();
    }
  }
  auto index = [&](const std::vector<Elem>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) idx = idx * factors[i]->size() + t[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> tmp(m), tmp2(m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < m; ++i) {
        tmp[i] = factors[i]->add(tuple[a][i], tuple[b][i]);
        tmp2[i] = factors[i]->mul(tuple[a][i], tuple[b][i]);
      }
      add[a * n + b] = index(tmp);
      mul[a * n + b] = index(tmp2);
    }
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0) s += ",";
      s += factors[i]->name(tuple[a][i]);
    }
    names[a] = s + ")";
  }
  for (std::size_t i = 0; i < m; ++i) {
    tmp[i] = factors[i]->zero();
    tmp2[i] = factors[i]->one();
  }
  const Elem zero = index(tmp), one = index(tmp2);
  ProductRing out{FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(names),
                                          std::move(desc), limits),
                  {}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Elem> image(n);
    for (std::size_t a = 0; a < n; ++a) image[a] = tuple[a][i];
    out.projections.emplace_back(out.ring, factors[i], std::move(image));
  }
  return out;
}

QuotientRing quotient_with_desc(const Ideal& ideal, RingDescription desc, const Limits& limits) {
  if (ideal.is_unit()) fail(ErrorKind::ImproperIdeal, "quotient by the unit ideal");
  const auto& r = ideal.r();
  const std::size_t n = r.size();
  std::vector<Elem> coset(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  const auto members = ideal.members().to_vector();
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) coset[r.add(x, i)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      add[a * k + b] = coset[r.add(reps[a], reps[b])];
      mul[a * k + b] = coset[r.mul(reps[a], reps[b])];
    }
  std::vector<std::string> names(k);
  for (std::size_t a = 0; a < k; ++a) names[a] = "[" + r.name(reps[a]) + "]";
  Ring q = FiniteRing::from_tables(k, std::move(add), std::move(mul), coset[r.zero()], coset[r.one()],
                                   std::move(names), std::move(desc), limits);
  return QuotientRing{q, RingMap(ideal.ring(), q, std::move(coset))};
}

IdealizedRing idealization_with_desc(const Module& module, RingDescription desc, const Limits& limits) {
  const auto& ring = module->ring();
  const auto& r = *ring;
  const auto& m = *module;
  const std::size_t rs = r.size(), ms = m.size();
  check_size(rs * ms, limits);
  const std::size_t n = rs * ms;
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ra = static_cast<Elem>(a / ms), ma = static_cast<Elem>(a % ms);
    for (std::size_t b = 0; b < n; ++b) {
      const auto rb = static_cast<Elem>(b / ms), mb = static_cast<Elem>(b % ms);
      add[a * n + b] = static_cast<Elem>(r.add(ra, rb) * ms + m.add(ma, mb));
      mul[a * n + b] = static_cast<Elem>(r.mul(ra, rb) * ms + m.add(m.act(ra, mb), m.act(rb, ma)));
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a)
    names[a] = "(" + r.name(static_cast<Elem>(a / ms)) + "," + m.name(static_cast<Elem>(a % ms)) + ")";
  const auto zero = static_cast<Elem>(r.zero() * ms + m.zero());
  const auto one = static_cast<Elem>(r.one() * ms + m.zero());
  Ring big = FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(names), std::move(desc),
                                     limits);
  std::vector<Elem> inc(rs), proj(n);
  for (std::size_t x = 0; x < rs; ++x) inc[x] = static_cast<Elem>(x * ms + m.zero());
  for (std::size_t a = 0; a < n; ++a) proj[a] = static_cast<Elem>(a / ms);
  ElementSet mod_ideal(n);
  for (std::size_t x = 0; x < ms; ++x) mod_ideal.set(static_cast<Elem>(r.zero() * ms + x));
  return IdealizedRing{big, RingMap(ring, big, std::move(inc)), RingMap(big, ring, std::move(proj)),
                       Ideal(big, std::move(mod_ideal))};
}

}  // namespace

Ring build_ring(const RingDescription& desc, const Limits& limits) {
  return std::visit(
      [&](const auto& node) -> Ring {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZMod>) {
          return build_zmod(node.n, limits);
        } else if constexpr (std::is_same_v<T, GaloisField>) {
          return build_gf(node, desc, limits);
        } else if constexpr (std::is_same_v<T, Product>) {
          std::vector<Ring> factors;
          for (const auto& f : node.factors) factors.push_back(build_ring(f, limits));
          return product_with_desc(factors, desc, limits).ring;
        } else if constexpr (std::is_same_v<T, PolyQuotient>) {
          return build_poly_quotient(node, desc, limits);
        } else if constexpr (std::is_same_v<T, Graded>) {
          return build_graded(node, limits).ring;
        } else if constexpr (std::is_same_v<T, Quotient>) {
          if (!node.ring) fail(ErrorKind::MalformedDescription, "quotient needs a ring");
          const Ring inner = build_ring(*node.ring, limits);
          std::vector<Elem> gens;
          for (const auto& g : node.generators) gens.push_back(inner->parse_element(g));
          return quotient_with_desc(ideal_generated(inner, gens), desc, limits).ring;
        } else {
          if (!node.ring) fail(ErrorKind::MalformedDescription, "idealization needs a ring");
          const Ring inner = build_ring(*node.ring, limits);
          return idealization_with_desc(build_module(inner, node.module, limits), desc, limits).ring;
        }
      },
      desc.node);
}

ProductRing product_ring(const std::vector<Ring>& factors, const Limits& limits) {
  std::vector<RingDescription> descs;
  for (const auto& f : factors) descs.push_back(f->desc());
  return product_with_desc(factors, desc::product(std::move(descs)), limits);
}

QuotientRing quotient_ring(const Ideal& ideal, const Limits& limits) {
  std::vector<std::string> gens;
  for (Elem g : small_generating_set(ideal)) gens.push_back(ideal.r().name(g));
  return quotient_with_desc(ideal, desc::quotient(ideal.r().desc(), std::move(gens)), limits);
}

IdealizedRing idealization(const Module& module, const Limits& limits) {
  return idealization_with_desc(module, desc::idealization(module->ring()->desc(), module->desc()), limits);
}

}  // namespace avoidance
