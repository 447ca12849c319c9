#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/description.hpp"
#include "avoidance/ideal.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

class FiniteModule;
using Module = std::shared_ptr<const FiniteModule>;

/// A finite module over a finite ring: addition table plus scalar action.
class FiniteModule {
 public:
  /// Validates the abelian group and module axioms exhaustively.
  static Module from_tables(Ring ring, std::size_t size, std::vector<Elem> add, Elem zero, std::vector<Elem> action,
                            std::vector<std::string> names, ModuleDescription desc);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] Elem zero() const noexcept { return zero_; }
  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  [[nodiscard]] Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// r * m.
  [[nodiscard]] Elem act(Elem r, Elem m) const noexcept { return action_[r * size_ + m]; }

  [[nodiscard]] const std::string& name(Elem a) const { return names_[a]; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] Elem parse_element(std::string_view text) const;
  [[nodiscard]] const ModuleDescription& desc() const noexcept { return desc_; }

 private:
  FiniteModule() = default;

  Ring ring_;
  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> action_;
  Elem zero_ = 0;
  std::vector<std::string> names_;
  ModuleDescription desc_;
};

class Submodule {
 public:
  Submodule(Module module, ElementSet members) : module_(std::move(module)), members_(std::move(members)) {}

  [[nodiscard]] const Module& module() const noexcept { return module_; }
  [[nodiscard]] const ElementSet& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.count(); }
  [[nodiscard]] bool contains(Elem m) const noexcept { return members_.test(m); }
  [[nodiscard]] bool is_subset_of(const Submodule& o) const noexcept { return members_.is_subset_of(o.members_); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module_ == b.module_ && a.members_ == b.members_;
  }

 private:
  Module module_;
  ElementSet members_;
};

Module build_module(const Ring& ring, const ModuleDescription& desc, const Limits& limits = {});

Submodule cyclic_submodule(const Module& module, Elem generator);
Submodule submodule_generated(const Module& module, const std::vector<Elem>& generators);
/// I M: the submodule generated by all r m with r in I.
Submodule ideal_times_module(const Ideal& ideal, const Module& module);
/// {r : r M = 0}.
Ideal module_annihilator(const Module& module);

/// Cyclic seeding plus sum closure; canonical order as for ideals.
std::vector<Submodule> all_submodules(const Module& module, const Limits& limits = {});

struct ModuleCover {
  std::size_t size = 0;
  std::vector<Submodule> members;
  bool certified_minimal = true;
};

struct ModulePredicates {
  bool cyclic = false;
  bool faithful = false;
  bool has_avoidance = false;
  bool multiplication_module = false;
  std::optional<std::size_t> min_cover_size;
};

ModulePredicates module_predicates(const Module& module, const Limits& limits = {});

/// Smallest family of proper submodules with union M; absent when M has
/// avoidance.
std::optional<ModuleCover> module_min_cover(const Module& module, const std::vector<Submodule>& lattice);

struct Lemma4Verdict {
  /// False when the union of the I_k M is not all of M.
  bool hypothesis_holds = false;
  /// Lowest k with I_k = R, when the hypothesis holds.
  std::optional<std::size_t> unit_index;
};

/// Throws NotFaithful, or EngineBug if the union is M but no I_k is R.
Lemma4Verdict lemma4_check(const Module& module, const std::vector<Ideal>& ideals);

/// A family of exactly |R/m| + 1 proper submodules whose union is M.
/// Throws DimensionTooSmall when dim M/mM < 2, NotMaximal, or EngineBug.
std::vector<Submodule> lemma3_cover(const Module& module, const Ideal& maximal, const Limits& limits = {});

/// Dimension of M / mM over the residue field R/m.
std::size_t residue_dimension(const Module& module, const Ideal& maximal);

}  // namespace avoidance
