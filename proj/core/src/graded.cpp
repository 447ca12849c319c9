#include "avoidance/graded.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/structure.hpp"

namespace avoidance {

namespace {

unsigned weighted(const std::vector<unsigned>& exponents, const std::vector<GradedVar>& vars) {
  unsigned d = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) d += exponents[i] * vars[i].degree;
  return d;
}

bool is_single_variable(const std::vector<unsigned>& exponents) {
  unsigned total = 0;
  for (auto e : exponents) total += e;
  return total == 1;
}

}  // namespace

GradedAlgebra build_graded(const RingDescription& field_desc, const std::vector<GradedVar>& vars,
                           unsigned truncation, const std::vector<std::string>& relations, const Limits& limits) {
  const Ring field = build_ring(field_desc, limits);
  if (!field->is_field()) fail(ErrorKind::NotAField, "graded algebras need a field in degree 0");
  if (truncation == 0) fail(ErrorKind::MalformedDescription, "truncation must be at least 1");
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.degree == 0) fail(ErrorKind::MalformedDescription, "variable '" + v.name + "' needs degree >= 1");
    if (!seen.insert(v.name).second) fail(ErrorKind::MalformedDescription, "duplicate variable '" + v.name + "'");
    names.push_back(v.name);
    weights.push_back(v.degree);
  }

  std::vector<std::vector<PolyTerm>> parsed;
  for (const auto& text : relations) {
    std::map<std::vector<unsigned>, Elem> combined;
    for (const auto& t : parse_polynomial(text, names, *field)) {
      auto [it, fresh] = combined.emplace(t.exponents, t.coeff);
      if (!fresh) it->second = field->add(it->second, t.coeff);
    }
    std::vector<PolyTerm> terms;
    for (const auto& [e, c] : combined)
      if (c != field->zero()) terms.push_back(PolyTerm{c, e});
    if (terms.empty()) continue;
    const unsigned degree = weighted(terms.front().exponents, vars);
    for (const auto& t : terms) {
      if (is_single_variable(t.exponents))
        fail(ErrorKind::LinearRelation, "relation '" + text + "' has a linear term");
      if (weighted(t.exponents, vars) != degree)
        fail(ErrorKind::NonHomogeneousRelation, "relation '" + text + "' is not homogeneous");
    }
    if (degree < 2 || degree >= truncation)
      fail(ErrorKind::MalformedDescription,
           "relation '" + text + "' has degree " + std::to_string(degree) + " outside [2, truncation)");
    parsed.push_back(std::move(terms));
  }

  GradedAlgebra g;
  g.field = field;
  g.truncation = truncation;
  g.presentation = truncated_quotient(field, names, weights, truncation, parsed);
  for (std::size_t i = 0; i < g.presentation.dim(); ++i)
    g.basis.push_back(GradedBasisElement{g.presentation.basis_names[i], g.presentation.basis_degrees[i]});
  g.ring = algebra_ring(g.presentation, desc::graded(field_desc, vars, truncation, relations), limits);
  return g;
}

GradedAlgebra build_graded(const Graded& desc, const Limits& limits) {
  if (!desc.field) fail(ErrorKind::MalformedDescription, "graded algebra needs a field");
  return build_graded(*desc.field, desc.vars, desc.truncation, desc.relations, limits);
}

namespace {

/// Indices of the basis elements of positive degree, plus a row-reduced
/// basis of m^2.
struct Irrelevant {
  std::vector<std::size_t> m;
  RowReduction m2;
};

Irrelevant irrelevant(const GradedAlgebra& g, const FieldOps& k) {
  Irrelevant out;
  const auto dim = g.dim();
  for (std::size_t i = 0; i < dim; ++i)
    if (g.basis[i].degree > 0) out.m.push_back(i);
  Matrix products;
  for (auto i : out.m)
    for (auto j : out.m) products.push_back(g.presentation.structure[i * dim + j]);
  out.m2 = row_reduce(k, std::move(products), dim);
  return out;
}

}  // namespace

std::vector<Elem> minimal_generators(const GradedAlgebra& g) {
  const FieldOps k(g.field);
  const auto dim = g.dim();
  auto irr = irrelevant(g, k);
  // Basis order is degree ascending, so the greedy extension takes the
  // lowest-degree representatives first.
  std::vector<Elem> out;
  RowReduction span = irr.m2;
  for (auto i : irr.m) {
    Vector e(dim, k.zero());
    e[i] = k.one();
    const Vector rest = reduce_against(k, span, e);
    if (std::all_of(rest.begin(), rest.end(), [&](Elem c) { return c == k.zero(); })) continue;
    out.push_back(algebra_element(g.field->size(), e));
    Matrix rows = span.rref;
    rows.push_back(e);
    span = row_reduce(k, std::move(rows), dim);
  }
  return out;
}

std::size_t cotangent_dimension(const GradedAlgebra& g) {
  const FieldOps k(g.field);
  const auto irr = irrelevant(g, k);
  return irr.m.size() - irr.m2.rref.size();
}

GradedClassification graded_avoidance_classify(const GradedAlgebra& g, const Limits& limits) {
  GradedClassification out;
  const auto lattice = all_ideals(g.ring, limits);
  out.avoidance = is_avoidance_ring(lattice);
  out.pir = ring_predicates(lattice).pir;
  out.truncated_univariate = minimal_generators(g).size() <= 1;
  if (out.avoidance && !out.pir) fail(ErrorKind::EngineBug, "graded avoidance ring that is not a PIR");
  if (out.avoidance && !out.truncated_univariate)
    fail(ErrorKind::EngineBug, "graded avoidance ring with more than one minimal generator");
  return out;
}

}  // namespace avoidance
