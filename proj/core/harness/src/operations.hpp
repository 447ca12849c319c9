#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "avoidance/ideal.hpp"
#include "avoidance/limits.hpp"
#include "avoidance/ring.hpp"

namespace avoidance::harness::detail {

using nlohmann::json;

/// A ring built from its description, with the retractions its
/// construction provides (product projections, idealization projection)
/// and a lazily built ideal lattice.
class Context {
 public:
  Context(json desc, const Limits& limits);

  [[nodiscard]] const json& desc() const noexcept { return desc_json_; }
  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] const std::vector<RingMap>& retractions() const noexcept { return retractions_; }
  [[nodiscard]] const Limits& limits() const noexcept { return limits_; }
  const IdealLattice& lattice();

  [[nodiscard]] Ideal ideal(const json& generators) const;
  [[nodiscard]] json generators(const Ideal& ideal) const;

 private:
  json desc_json_;
  Limits limits_;
  Ring ring_;
  std::vector<RingMap> retractions_;
  std::unique_ptr<IdealLattice> lattice_;
};

/// Runs a named operation. Library errors other than resource bounds are
/// folded into the observation as {"error": kind, "detail": text}.
json evaluate(Context& ctx, const std::string& operation, const json& args);

/// Ring map described by a chain of steps starting at the context ring.
struct MapChain {
  RingMap map;
  Ring target;
  std::vector<RingMap> retractions;
};
MapChain apply_steps(const Ring& start, const std::vector<RingMap>& retractions, const json& steps,
                     const Limits& limits);

}  // namespace avoidance::harness::detail
