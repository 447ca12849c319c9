#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avoidance/ideal.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance {

/// A target ideal together with the ideals meant to cover it. "Covers"
/// means set containment in the union of member sets.
struct CoverFamily {
  Ideal target;
  std::vector<Ideal> members;

  [[nodiscard]] std::size_t n() const noexcept { return members.size(); }
};

bool covers(const CoverFamily& family);

/// True iff I is not inside the union of its proper subideals.
bool has_avoidance(const Ideal& ideal, const IdealLattice& lattice);
bool has_avoidance(const Ideal& ideal);

struct MinCover {
  std::size_t size = 0;
  CoverFamily family;
  /// False when the candidate pool was too large for exhaustive search and
  /// `size` is only an upper bound.
  bool certified_minimal = true;
};

/// Exhaustive search is used up to this many candidate members.
inline constexpr std::size_t kExhaustiveCoverCandidates = 32;

/// Smallest family of proper subideals covering I; absent iff I has
/// avoidance.
std::optional<MinCover> min_cover(const Ideal& ideal, const IdealLattice& lattice);
std::optional<MinCover> min_cover(const Ideal& ideal);

bool is_avoidance_ring(const IdealLattice& lattice);
bool is_avoidance_ring(const Ring& ring, const Limits& limits = {});

/// Throws NotACover.
bool is_irredundant(const CoverFamily& family);

struct McCoyResult {
  unsigned per_member_exponent = 0;
  std::size_t per_member_witness = 0;  ///< lowest member index containing I^d
  std::optional<unsigned> intersection_exponent;
  /// The general bound on the intersection exponent, n - 1 (or 1 for n = 1).
  unsigned bound = 0;
};

/// Throws NotACover, or BoundViolation when an irredundant cover needs an
/// intersection exponent above the bound.
McCoyResult mccoy(const CoverFamily& family);

/// Returns some k with target inside member k when at most two members are
/// non-radical. Throws NotACover, HypothesisFailed, EngineBug.
std::size_t radical_variant_check(const CoverFamily& family);

/// Every cover of an ideal I of the source forces I S inside some I_k S.
bool map_has_avoidance(const RingMap& phi, const IdealLattice& source);
bool map_has_avoidance(const RingMap& phi, const Limits& limits = {});

/// For a failing map: the source ideal I and the proper subideals J with
/// I S not inside J S whose union covers I.
struct MapAvoidanceWitness {
  Ideal ideal;
  std::vector<Ideal> bad_subideals;
};
std::optional<MapAvoidanceWitness> map_avoidance_witness(const RingMap& phi, const IdealLattice& source);

struct PrimaryAvoidance {
  bool avoidance = false;
  bool primary_avoidance = false;
};

/// Throws EngineBug if the two notions disagree.
PrimaryAvoidance primary_avoidance_equiv(const IdealLattice& lattice);
PrimaryAvoidance primary_avoidance_equiv(const Ring& ring, const Limits& limits = {});

struct ProbeSource {
  std::string label;
  RingMap map;
};

struct ConjectureReport {
  std::string target;
  bool right_side = false;              ///< every local factor of R is a field
  bool sampled_left_side = true;        ///< every supplied map has avoidance
  std::size_t maps_checked = 0;
  std::vector<std::string> failing_maps;
  bool low_confidence = false;          ///< no maps supplied
  bool sides_agree = false;
};

/// Exploratory comparison; asserts nothing.
ConjectureReport conjecture_probe(const Ring& target, const std::vector<ProbeSource>& sources,
                                  const Limits& limits = {});

}  // namespace avoidance
