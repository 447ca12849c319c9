#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "avoidance/element_set.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

/// An ideal of a specific ring: a member bit-vector plus, optionally, the
/// generators it was built from.
class Ideal {
 public:
  /// Trusted constructor: `members` must already be an ideal of `ring`.
  Ideal(Ring ring, ElementSet members, std::optional<std::vector<Elem>> generators = std::nullopt)
      : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

  /// Validating constructor; throws MalformedDescription if `members` is not
  /// an ideal.
  static Ideal checked(Ring ring, ElementSet members);

  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] const FiniteRing& r() const noexcept { return *ring_; }
  [[nodiscard]] const ElementSet& members() const noexcept { return members_; }
  [[nodiscard]] const std::optional<std::vector<Elem>>& generators() const noexcept { return generators_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.count(); }
  [[nodiscard]] bool contains(Elem a) const noexcept { return members_.test(a); }
  [[nodiscard]] bool is_zero() const noexcept { return size() == 1; }
  [[nodiscard]] bool is_unit() const noexcept { return members_.test(ring_->one()); }
  [[nodiscard]] bool is_subset_of(const Ideal& o) const noexcept { return members_.is_subset_of(o.members_); }

  /// Same ring and same members (generators are not compared).
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  Ring ring_;
  ElementSet members_;
  std::optional<std::vector<Elem>> generators_;
};

/// True if `members` contains zero and is closed under + and the ring action.
bool is_ideal(const FiniteRing& ring, const ElementSet& members);

/// The additive subgroup generated by `a` and `b` (both must be subgroups).
ElementSet subgroup_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);

Ideal principal_ideal(const Ring& ring, Elem generator);
Ideal ideal_generated(const Ring& ring, const std::vector<Elem>& generators);

/// A greedy generating set, lowest element indices first. A principal ideal
/// yields its lowest-index generator.
std::vector<Elem> small_generating_set(const Ideal& ideal);
/// Printable label such as "(x,y)" or "(4)".
std::string ideal_label(const Ideal& ideal);

/// All ideals of a ring in canonical order (ascending size, then lowest
/// differing element), with inclusion queries and Hasse edges on demand.
class IdealLattice {
 public:
  IdealLattice(Ring ring, std::vector<Ideal> ideals);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] std::size_t size() const noexcept { return ideals_.size(); }
  [[nodiscard]] const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  [[nodiscard]] const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  [[nodiscard]] auto begin() const noexcept { return ideals_.begin(); }
  [[nodiscard]] auto end() const noexcept { return ideals_.end(); }

  [[nodiscard]] std::optional<std::size_t> index_of(const ElementSet& members) const;
  [[nodiscard]] std::size_t index_of(const Ideal& ideal) const;
  [[nodiscard]] bool includes(std::size_t small, std::size_t big) const {
    return ideals_[small].is_subset_of(ideals_[big]);
  }
  /// Indices of the ideals strictly contained in ideal i.
  [[nodiscard]] std::vector<std::size_t> proper_subideals(std::size_t i) const;
  /// Covering pairs (lower, upper) of the inclusion order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> hasse() const;

 private:
  Ring ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Principal-ideal seeding followed by sum closure to a fixpoint.
/// Throws LatticeBound past limits.max_ideals.
IdealLattice all_ideals(const Ring& ring, const Limits& limits = {});

enum class IdealOp { Sum, Product, Intersection, Colon };

Ideal ideal_combine(IdealOp op, const Ideal& a, const Ideal& b);
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) { return ideal_combine(IdealOp::Sum, a, b); }
inline Ideal ideal_product(const Ideal& a, const Ideal& b) { return ideal_combine(IdealOp::Product, a, b); }
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) { return ideal_combine(IdealOp::Intersection, a, b); }
/// (a : b) = {r : r b is inside a}.
inline Ideal ideal_colon(const Ideal& a, const Ideal& b) { return ideal_combine(IdealOp::Colon, a, b); }

Ideal ideal_power(const Ideal& a, unsigned d);
Ideal radical(const Ideal& a);
Ideal annihilator(const Ideal& a);

struct IdealPredicates {
  bool principal = false;
  bool idempotent = false;
  bool pure = false;
  bool radical_ideal = false;
  bool prime = false;
  bool maximal = false;
  bool primary = false;
  bool multiplication_ideal = false;
};

bool is_principal(const Ideal& a);
bool is_prime(const Ideal& a);
bool is_maximal(const Ideal& a);
bool is_primary(const Ideal& a);
bool is_radical(const Ideal& a);
/// Every subideal J of `a` in the lattice satisfies J = a (J : a).
bool is_multiplication_ideal(const Ideal& a, const IdealLattice& lattice);

IdealPredicates ideal_predicates(const Ideal& a, const IdealLattice& lattice);
IdealPredicates ideal_predicates(const Ideal& a);

struct Spectrum {
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
};

/// Primes and maximals filtered from the lattice. Throws EngineBug if they
/// differ (they coincide for finite rings).
Spectrum spectrum(const IdealLattice& lattice);
Spectrum spectrum(const Ring& ring);

}  // namespace avoidance
