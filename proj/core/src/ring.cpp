#include "avoidance/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <random>
#include <string>

#include "avoidance/error.hpp"

namespace avoidance {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void check_table(const std::vector<Elem>& table, std::size_t n, const char* what) {
  if (table.size() != n * n) fail(ErrorKind::MalformedDescription, std::string(what) + " table has wrong shape");
  for (Elem e : table)
    if (e >= n) fail(ErrorKind::MalformedDescription, std::string(what) + " table entry out of range");
}

}  // namespace

Ring FiniteRing::from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                             std::vector<std::string> names, RingDescription desc, const Limits& limits) {
  if (size == 0) fail(ErrorKind::MalformedDescription, "empty ring");
  if (size > limits.max_ring_size)
    fail(ErrorKind::SizeBound, "ring of " + std::to_string(size) + " elements exceeds bound " +
                                   std::to_string(limits.max_ring_size));
  check_table(add, size, "addition");
  check_table(mul, size, "multiplication");
  if (zero >= size || one >= size) fail(ErrorKind::MalformedDescription, "zero/one out of range");
  if (zero == one) fail(ErrorKind::OneEqualsZero, "the zero ring is not admitted");
  if (names.size() != size) fail(ErrorKind::MalformedDescription, "element name count mismatch");

  const std::size_t n = size;
  auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };

  std::vector<Elem> neg(n, static_cast<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, zero) != a) fail(ErrorKind::MalformedDescription, "zero is not an additive identity");
    if (M(a, one) != a) fail(ErrorKind::MalformedDescription, "one is not a multiplicative identity");
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) fail(ErrorKind::MalformedDescription, "addition is not commutative");
      if (M(a, b) != M(b, a))
        fail(ErrorKind::NonCommutative, "multiplication of " + names[a] + " and " + names[b] + " does not commute");
      if (A(a, b) == zero) neg[a] = static_cast<Elem>(b);
    }
    if (neg[a] == n) fail(ErrorKind::MalformedDescription, "element " + names[a] + " has no additive inverse");
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (A(A(a, b), c) != A(a, A(b, c))) fail(ErrorKind::MalformedDescription, "addition is not associative");
    if (M(M(a, b), c) != M(a, M(b, c))) fail(ErrorKind::MalformedDescription, "multiplication is not associative");
    if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail(ErrorKind::MalformedDescription, "distributivity fails");
  };
  if (n <= limits.exhaustive_axiom_check) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < (std::size_t{1} << 22); ++t) check_triple(rng() % n, rng() % n, rng() % n);
  }

  std::shared_ptr<FiniteRing> ring(new FiniteRing());
  auto& r = *ring;
  r.size_ = n;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.neg_ = std::move(neg);
  r.zero_ = zero;
  r.one_ = one;
  r.names_ = std::move(names);
  r.desc_ = std::move(desc);
  return ring;
}

Elem FiniteRing::from_integer(std::int64_t n) const {
  const auto c = static_cast<std::int64_t>(characteristic());
  std::int64_t k = ((n % c) + c) % c;
  Elem acc = zero_;
  for (std::int64_t i = 0; i < k; ++i) acc = add(acc, one_);
  return acc;
}

Elem FiniteRing::pow(Elem a, std::size_t e) const {
  Elem result = one_;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  for (Elem b = 0; b < size_; ++b)
    if (mul(a, b) == one_) return b;
  return std::nullopt;
}

bool FiniteRing::is_unit(Elem a) const { return inverse(a).has_value(); }

bool FiniteRing::is_field() const {
  for (Elem a = 0; a < size_; ++a)
    if (a != zero_ && !is_unit(a)) return false;
  return true;
}

std::size_t FiniteRing::characteristic() const {
  std::size_t c = 1;
  for (Elem acc = one_; acc != zero_; acc = add(acc, one_)) ++c;
  return c;
}

std::optional<Elem> FiniteRing::find(std::string_view name) const {
  const std::string key = strip_spaces(name);
  for (std::size_t i = 0; i < size_; ++i)
    if (strip_spaces(names_[i]) == key) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteRing::parse_element(std::string_view text) const {
  if (auto e = find(text)) return *e;
  const std::string key = strip_spaces(text);
  std::int64_t value = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  bool negative = false;
  if (first != last && *first == '-') {
    negative = true;
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc() && ptr == last && first != last) return from_integer(negative ? -value : value);
  fail(ErrorKind::MalformedDescription, "unknown element '" + std::string(text) + "'");
}

bool is_homomorphism(const FiniteRing& source, const FiniteRing& target, const std::vector<Elem>& image) {
  const std::size_t n = source.size();
  if (image.size() != n) return false;
  for (Elem e : image)
    if (e >= target.size()) return false;
  if (image[source.zero()] != target.zero() || image[source.one()] != target.one()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (image[source.add(a, b)] != target.add(image[a], image[b])) return false;
      if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
    }
  return true;
}

RingMap::RingMap(Ring source, Ring target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) fail(ErrorKind::MalformedDescription, "ring map with null ring");
  if (!is_homomorphism(*source_, *target_, image_))
    fail(ErrorKind::MalformedDescription, "element table is not a unital ring homomorphism");
}

RingMap RingMap::identity(const Ring& ring) {
  std::vector<Elem> image(ring->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<Elem>(i);
  return RingMap(Trusted{}, ring, ring, std::move(image));
}

RingMap RingMap::compose(const RingMap& psi, const RingMap& phi) {
  if (phi.target_ != psi.source_) fail(ErrorKind::RingMismatch, "maps are not composable");
  std::vector<Elem> image(phi.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = psi.image_[phi.image_[i]];
  return RingMap(Trusted{}, phi.source_, psi.target_, std::move(image));
}

bool RingMap::is_injective() const {
  ElementSet seen(target_->size());
  for (Elem e : image_) {
    if (seen.test(e)) return false;
    seen.set(e);
  }
  return true;
}

bool RingMap::is_surjective() const {
  ElementSet seen(target_->size());
  for (Elem e : image_) seen.set(e);
  return seen.count() == target_->size();
}

namespace {

struct IsoSearch {
  const FiniteRing& a;
  const FiniteRing& b;
  std::vector<Elem> map;
  std::vector<bool> used;
  std::vector<std::size_t> add_order_a, add_order_b;

  bool consistent(Elem x) const {
    for (Elem y = 0; y <= x; ++y) {
      if (map[y] == b.size()) continue;
      const Elem s = a.add(x, y), p = a.mul(x, y);
      if (map[s] != b.size() && map[s] != b.add(map[x], map[y])) return false;
      if (map[p] != b.size() && map[p] != b.mul(map[x], map[y])) return false;
    }
    return true;
  }

  bool assign(Elem x) {
    if (x == a.size()) return is_homomorphism(a, b, map);
    if (map[x] != b.size()) return assign(x + 1);
    for (Elem t = 0; t < b.size(); ++t) {
      if (used[t] || add_order_a[x] != add_order_b[t]) continue;
      map[x] = t;
      used[t] = true;
      if (consistent(x) && assign(x + 1)) return true;
      map[x] = static_cast<Elem>(b.size());
      used[t] = false;
    }
    return false;
  }
};

std::size_t additive_order(const FiniteRing& r, Elem x) {
  std::size_t k = 1;
  for (Elem acc = x; acc != r.zero(); acc = r.add(acc, x)) ++k;
  return k;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() >= 64 || b.size() >= 64)
    fail(ErrorKind::SizeBound, "isomorphism search is only offered below 64 elements");
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, std::vector<Elem>(a.size(), static_cast<Elem>(b.size())), std::vector<bool>(b.size(), false), {},
              {}};
  for (Elem x = 0; x < a.size(); ++x) s.add_order_a.push_back(additive_order(a, x));
  for (Elem x = 0; x < b.size(); ++x) s.add_order_b.push_back(additive_order(b, x));
  s.map[a.zero()] = b.zero();
  s.used[b.zero()] = true;
  s.map[a.one()] = b.one();
  s.used[b.one()] = true;
  if (s.assign(0)) return s.map;
  return std::nullopt;
}

}  // namespace avoidance
