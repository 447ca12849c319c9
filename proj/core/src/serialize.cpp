#include <algorithm>
#include "avoidance/serialize.hpp"

namespace avoidance {

nlohmann::json to_json(const Ideal& ideal) {
  std::vector<std::string> names;
  ideal.members().for_each([&](Elem e) { names.push_back(ideal.r().name(e)); });
  std::sort(names.begin(), names.end());
  return names;
}

nlohmann::json to_json(const IdealLattice& lattice) {
  nlohmann::json out;
  out["ring"] = to_json(lattice.ring()->desc());
  auto ideals = nlohmann::json::array();
  for (const auto& ideal : lattice) ideals.push_back({{"label", ideal_label(ideal)}, {"members", to_json(ideal)}});
  out["ideals"] = std::move(ideals);
  std::vector<std::vector<std::size_t>> up(lattice.size());
  for (auto [lo, hi] : lattice.hasse()) up[lo].push_back(hi);
  out["covers"] = up;
  return out;
}

}  // namespace avoidance
