#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace avoidance::zz {

/// The ideal gen * Z; gen = 0 is the zero ideal.
struct ZIdeal {
  std::uint64_t gen = 0;
  friend bool operator==(ZIdeal, ZIdeal) = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// lcm(0, n) = 0. Returns nullopt on 64-bit overflow.
std::optional<std::uint64_t> lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t squarefree_part(std::uint64_t n);

ZIdeal sum(ZIdeal a, ZIdeal b);
ZIdeal product(ZIdeal a, ZIdeal b);
ZIdeal intersection(ZIdeal a, ZIdeal b);
ZIdeal radical(ZIdeal a);
bool contains(ZIdeal a, std::int64_t m);

/// Residue-exhaustion decision of n Z inside the union of the n_k Z: the
/// multiples j n are scanned over one full period lcm(n_k) / gcd(n, lcm(n_k)).
/// Throws ZeroIdealUnsupported for zero generators, SizeBound when the period
/// exceeds `max_period`.
bool cover_decision(ZIdeal ideal, const std::vector<ZIdeal>& family, std::uint64_t max_period = 1u << 22);

/// Lowest k with n_k | n.
std::optional<std::size_t> containing_member(ZIdeal ideal, const std::vector<ZIdeal>& family);

struct ZMcCoy {
  unsigned exponent = 1;
  std::size_t member = 0;
};

/// Z is an avoidance ring: for a cover the exponent is always 1. Throws
/// NotACover, or EngineBug if a cover has no containing member.
ZMcCoy mccoy(ZIdeal ideal, const std::vector<ZIdeal>& family, std::uint64_t max_period = 1u << 22);

}  // namespace avoidance::zz
