#include "avoidance/integers.hpp"

#include <numeric>
#include <string>

#include "avoidance/error.hpp"

namespace avoidance::zz {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::optional<std::uint64_t> lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t q = a / gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(q, b, &out)) return std::nullopt;
  return out;
}

std::uint64_t squarefree_part(std::uint64_t n) {
  if (n <= 1) return n;
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out *= p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out *= n;
  return out;
}

ZIdeal sum(ZIdeal a, ZIdeal b) { return {gcd(a.gen, b.gen)}; }

ZIdeal product(ZIdeal a, ZIdeal b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a.gen, b.gen, &out)) fail(ErrorKind::SizeBound, "ideal product overflows 64 bits");
  return {out};
}

ZIdeal intersection(ZIdeal a, ZIdeal b) {
  auto l = lcm(a.gen, b.gen);
  if (!l) fail(ErrorKind::SizeBound, "ideal intersection overflows 64 bits");
  return {*l};
}

ZIdeal radical(ZIdeal a) { return {squarefree_part(a.gen)}; }

bool contains(ZIdeal a, std::int64_t m) {
  const std::uint64_t magnitude = m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
  if (a.gen == 0) return magnitude == 0;
  return magnitude % a.gen == 0;
}

bool cover_decision(ZIdeal ideal, const std::vector<ZIdeal>& family, std::uint64_t max_period) {
  if (ideal.gen == 0) fail(ErrorKind::ZeroIdealUnsupported, "the zero ideal is covered trivially");
  if (family.empty()) return false;
  // j n is divisible by n_k exactly when d_k = n_k / gcd(n_k, n) divides j,
  // so coverage of the multiples of n is periodic in j with period lcm(d_k).
  std::vector<std::uint64_t> step;
  std::uint64_t period = 1;
  for (const auto& member : family) {
    if (member.gen == 0) fail(ErrorKind::ZeroIdealUnsupported, "zero ideal in a cover family");
    const std::uint64_t d = member.gen / gcd(member.gen, ideal.gen);
    step.push_back(d);
    auto l = lcm(period, d);
    if (!l || *l > max_period)
      fail(ErrorKind::SizeBound, "residue period exceeds " + std::to_string(max_period));
    period = *l;
  }
  std::vector<std::uint64_t> residue(step.size(), 0);
  for (std::uint64_t j = 1; j <= period; ++j) {
    bool covered = false;
    for (std::size_t k = 0; k < step.size(); ++k) {
      if (++residue[k] == step[k]) residue[k] = 0;
      covered = covered || residue[k] == 0;
    }
    if (!covered) return false;
  }
  return true;
}

std::optional<std::size_t> containing_member(ZIdeal ideal, const std::vector<ZIdeal>& family) {
  for (std::size_t k = 0; k < family.size(); ++k)
    if (contains(family[k], static_cast<std::int64_t>(ideal.gen))) return k;
  return std::nullopt;
}

ZMcCoy mccoy(ZIdeal ideal, const std::vector<ZIdeal>& family, std::uint64_t max_period) {
  if (!cover_decision(ideal, family, max_period)) fail(ErrorKind::NotACover, "family does not cover the ideal");
  auto k = containing_member(ideal, family);
  if (!k) fail(ErrorKind::EngineBug, "a cover in Z without a containing member");
  return ZMcCoy{1, *k};
}

}  // namespace avoidance::zz
