#include "avoidance/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "avoidance/error.hpp"

namespace avoidance {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const FiniteRing& base)
      : text_(text), vars_(vars), base_(base) {}

  std::vector<PolyTerm> parse() {
    std::vector<PolyTerm> terms;
    skip();
    if (pos_ == text_.size()) return terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto term = parse_term();
      if (negative) term.coeff = base_.neg(term.coeff);
      if (term.coeff != base_.zero()) terms.push_back(std::move(term));
      skip();
      if (pos_ == text_.size()) break;
      const char op = peek();
      if (op != '+' && op != '-') error("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::MalformedDescription,
         "polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  unsigned parse_uint() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer");
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (v > 1000000) error("integer too large");
    }
    return static_cast<unsigned>(v);
  }

  PolyTerm parse_term() {
    PolyTerm term{base_.one(), std::vector<unsigned>(vars_.size(), 0)};
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff = base_.mul(term.coeff, base_.from_integer(parse_uint()));
      } else if (c == '(') {
        const auto close = text_.find(')', pos_);
        if (close == std::string_view::npos) error("unbalanced parenthesis");
        const auto inner = text_.substr(pos_ + 1, close - pos_ - 1);
        term.coeff = base_.mul(term.coeff, base_.parse_element(inner));
        pos_ = close + 1;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const auto start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) error("undeclared variable '" + name + "'");
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          e = parse_uint();
        }
        term.exponents[static_cast<std::size_t>(it - vars_.begin())] += e;
      } else {
        error("expected a coefficient or variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const FiniteRing& base_;
  std::size_t pos_ = 0;
};

unsigned weighted_degree(const std::vector<unsigned>& exps, const std::vector<unsigned>& weights) {
  unsigned d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * weights[i];
  return d;
}

std::string monomial_name(const std::vector<unsigned>& exps, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

bool needs_parens(const std::string& s) {
  return s.find_first_of("+-*^") != std::string::npos;
}

}  // namespace

std::vector<PolyTerm> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                       const FiniteRing& base) {
  return PolyParser(text, vars, base).parse();
}

Vector algebra_coordinates(std::size_t field_size, std::size_t dim, Elem e) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<Elem>(e % field_size);
    e = static_cast<Elem>(e / field_size);
  }
  return v;
}

Elem algebra_element(std::size_t field_size, const Vector& coords) {
  std::size_t e = 0;
  for (std::size_t i = coords.size(); i-- > 0;) e = e * field_size + coords[i];
  return static_cast<Elem>(e);
}

Ring algebra_ring(const AlgebraPresentation& algebra, RingDescription desc, const Limits& limits) {
  const auto& k = *algebra.field;
  const std::size_t q = k.size();
  const std::size_t dim = algebra.dim();
  if (algebra.basis_degrees.size() != dim || algebra.structure.size() != dim * dim || algebra.unit.size() != dim)
    fail(ErrorKind::MalformedDescription, "algebra presentation has inconsistent dimensions");
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= q;
    if (n > limits.max_ring_size)
      fail(ErrorKind::SizeBound, "algebra of dimension " + std::to_string(dim) + " over a field of " +
                                     std::to_string(q) + " elements exceeds bound " +
                                     std::to_string(limits.max_ring_size));
  }

  std::vector<Vector> coords(n);
  for (std::size_t e = 0; e < n; ++e) coords[e] = algebra_coordinates(q, dim, static_cast<Elem>(e));

  std::vector<Elem> add(n * n);
  Vector tmp(dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = k.add(coords[a][i], coords[b][i]);
      add[a * n + b] = algebra_element(q, tmp);
    }

  // basis_i * b for every element b, then c * x for every scalar c.
  std::vector<Elem> basis_times(dim * n);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(tmp.begin(), tmp.end(), k.zero());
      for (std::size_t j = 0; j < dim; ++j) {
        const Elem bj = coords[b][j];
        if (bj == k.zero()) continue;
        const auto& s = algebra.structure[i * dim + j];
        for (std::size_t t = 0; t < dim; ++t) tmp[t] = k.add(tmp[t], k.mul(bj, s[t]));
      }
      basis_times[i * n + b] = algebra_element(q, tmp);
    }
  std::vector<Elem> scale(q * n);
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = k.mul(static_cast<Elem>(c), coords[x][i]);
      scale[c * n + x] = algebra_element(q, tmp);
    }

  const Elem zero = algebra_element(q, Vector(dim, k.zero()));
  std::vector<Elem> mul(n * n);
  std::size_t place = 1;  // q^top
  std::size_t top = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == 0) {
      for (std::size_t b = 0; b < n; ++b) mul[b] = zero;
      continue;
    }
    while (place * q <= a) {
      place *= q;
      ++top;
    }
    const std::size_t c = a / place;
    const std::size_t rest = a - c * place;
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = add[mul[rest * n + b] * n + scale[c * n + basis_times[top * n + b]]];
  }

  // Terms print highest degree first, basis order within a degree.
  std::vector<std::size_t> term_order(dim);
  for (std::size_t i = 0; i < dim; ++i) term_order[i] = i;
  std::stable_sort(term_order.begin(), term_order.end(), [&](std::size_t a, std::size_t b) {
    return algebra.basis_degrees[a] > algebra.basis_degrees[b];
  });
  std::vector<std::string> names(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::pair<std::string, bool>> terms;  // text, is a composite constant
    for (std::size_t i : term_order) {
      const Elem c = coords[e][i];
      if (c == k.zero()) continue;
      const std::string& basis = algebra.basis_names[i];
      const std::string& cname = k.name(c);
      if (basis == "1") {
        terms.emplace_back(cname, needs_parens(cname));
      } else if (c == k.one()) {
        terms.emplace_back(basis, false);
      } else {
        terms.emplace_back((needs_parens(cname) ? "(" + cname + ")" : cname) + "*" + basis, false);
      }
    }
    if (terms.empty()) {
      names[e] = k.name(k.zero());
      continue;
    }
    std::string name;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (t > 0) name += "+";
      name += (terms.size() > 1 && terms[t].second) ? "(" + terms[t].first + ")" : terms[t].first;
    }
    names[e] = std::move(name);
  }

  const Elem one = algebra_element(q, algebra.unit);
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(names), std::move(desc),
                                 limits);
}

AlgebraPresentation truncated_quotient(const Ring& field, const std::vector<std::string>& vars,
                                       const std::vector<unsigned>& weights, unsigned truncation,
                                       const std::vector<std::vector<PolyTerm>>& relations) {
  const FieldOps k(field);
  if (weights.size() != vars.size()) fail(ErrorKind::MalformedDescription, "one weight per variable required");
  for (auto w : weights)
    if (w == 0) fail(ErrorKind::MalformedDescription, "variable weights must be positive");
  if (truncation == 0) fail(ErrorKind::OneEqualsZero, "truncation 0 kills the unit");

  // Monomials of weighted degree < truncation: degree ascending, then
  // exponent vectors descending (x before y).
  std::vector<std::vector<unsigned>> monomials;
  std::vector<unsigned> current(vars.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t var, unsigned degree) -> void {
    if (var == vars.size()) {
      monomials.push_back(current);
      if (monomials.size() > 4096) fail(ErrorKind::SizeBound, "too many monomials below the truncation degree");
      return;
    }
    for (unsigned e = 0; degree + e * weights[var] < truncation; ++e) {
      current[var] = e;
      self(self, var + 1, degree + e * weights[var]);
    }
    current[var] = 0;
  };
  enumerate(enumerate, 0, 0);
  std::stable_sort(monomials.begin(), monomials.end(), [&](const auto& a, const auto& b) {
    const auto da = weighted_degree(a, weights), db = weighted_degree(b, weights);
    if (da != db) return da < db;
    return a > b;
  });
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  const std::size_t width = monomials.size();

  auto times = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) -> std::optional<std::size_t> {
    std::vector<unsigned> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    auto it = index.find(c);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  Matrix rows;
  for (const auto& rel : relations) {
    Vector base(width, k.zero());
    for (const auto& term : rel) {
      if (term.exponents.size() != vars.size()) fail(ErrorKind::MalformedDescription, "term arity mismatch");
      auto it = index.find(term.exponents);
      if (it == index.end()) continue;
      base[it->second] = k.add(base[it->second], term.coeff);
    }
    for (const auto& m : monomials) {
      Vector row(width, k.zero());
      bool nonzero = false;
      for (std::size_t c = 0; c < width; ++c) {
        if (base[c] == k.zero()) continue;
        if (auto t = times(m, monomials[c])) {
          row[*t] = k.add(row[*t], base[c]);
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> order(width);
  for (std::size_t i = 0; i < width; ++i) order[i] = width - 1 - i;
  const auto reduced = row_reduce(k, std::move(rows), width, order);

  std::vector<bool> is_pivot(width, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  std::vector<std::size_t> standard;
  for (std::size_t i = 0; i < width; ++i)
    if (!is_pivot[i]) standard.push_back(i);
  if (standard.empty() || standard.front() != 0)
    fail(ErrorKind::OneEqualsZero, "relations generate the unit ideal");

  auto normal_form = [&](std::optional<std::size_t> monomial) {
    Vector full(width, k.zero());
    if (monomial) full[*monomial] = k.one();
    full = reduce_against(k, reduced, std::move(full));
    Vector out(standard.size());
    for (std::size_t i = 0; i < standard.size(); ++i) out[i] = full[standard[i]];
    return out;
  };

  AlgebraPresentation alg;
  alg.field = field;
  const std::size_t dim = standard.size();
  for (auto s : standard) {
    alg.basis_names.push_back(monomial_name(monomials[s], vars));
    alg.basis_degrees.push_back(weighted_degree(monomials[s], weights));
  }
  alg.structure.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      alg.structure[i * dim + j] = normal_form(times(monomials[standard[i]], monomials[standard[j]]));
  alg.unit = normal_form(std::size_t{0});
  return alg;
}

}  // namespace avoidance
