#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/description.hpp"
#include "avoidance/element_set.hpp"
#include "avoidance/limits.hpp"

namespace avoidance {

class FiniteRing;
using Ring = std::shared_ptr<const FiniteRing>;

/// A finite commutative unital ring stored as full operation tables over
/// element indices 0..size-1. Immutable once built.
class FiniteRing {
 public:
  /// Validates the commutative ring axioms (see Limits for the associativity
  /// sampling threshold) and returns the shared handle.
  static Ring from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                          std::vector<std::string> names, RingDescription desc, const Limits& limits = {});

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem one() const noexcept { return one_; }
  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size_ + b]; }
  [[nodiscard]] Elem neg(Elem a) const noexcept { return neg_[a]; }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// n * 1 for a nonnegative integer n.
  [[nodiscard]] Elem from_integer(std::int64_t n) const;
  [[nodiscard]] Elem pow(Elem a, std::size_t e) const;

  [[nodiscard]] bool is_unit(Elem a) const;
  [[nodiscard]] std::optional<Elem> inverse(Elem a) const;
  [[nodiscard]] bool is_field() const;
  /// Additive order of one.
  [[nodiscard]] std::size_t characteristic() const;

  [[nodiscard]] const std::string& name(Elem a) const { return names_[a]; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::optional<Elem> find(std::string_view name) const;
  /// Resolves an element expression: an exact element name (whitespace
  /// ignored) or a decimal integer n, read as n * 1.
  [[nodiscard]] Elem parse_element(std::string_view text) const;

  [[nodiscard]] const RingDescription& desc() const noexcept { return desc_; }

  [[nodiscard]] ElementSet empty_set() const { return ElementSet(size_); }
  [[nodiscard]] ElementSet all_elements() const { return ElementSet::full(size_); }

 private:
  FiniteRing() = default;

  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::string> names_;
  RingDescription desc_;
};

/// A unital ring homomorphism, stored elementwise.
class RingMap {
 public:
  /// Checks exhaustively that `image` preserves 0, 1, + and *.
  RingMap(Ring source, Ring target, std::vector<Elem> image);

  static RingMap identity(const Ring& ring);
  /// psi after phi.
  static RingMap compose(const RingMap& psi, const RingMap& phi);

  [[nodiscard]] const Ring& source() const noexcept { return source_; }
  [[nodiscard]] const Ring& target() const noexcept { return target_; }
  [[nodiscard]] Elem operator()(Elem a) const noexcept { return image_[a]; }
  [[nodiscard]] const std::vector<Elem>& image() const noexcept { return image_; }

  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;

 private:
  struct Trusted {};
  RingMap(Trusted, Ring source, Ring target, std::vector<Elem> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

  Ring source_;
  Ring target_;
  std::vector<Elem> image_;
};

/// True when the map preserves 0, 1, + and * (exhaustive).
bool is_homomorphism(const FiniteRing& source, const FiniteRing& target, const std::vector<Elem>& image);

/// Exhaustive isomorphism search, offered only below 64 elements.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace avoidance
