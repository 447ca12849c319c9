#include "cover_search.hpp"

#include <algorithm>

namespace avoidance::detail {

std::vector<std::size_t> maximal_candidates(const std::vector<ElementSet>& candidates) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j || !candidates[i].is_subset_of(candidates[j])) continue;
      dominated = !(candidates[i] == candidates[j]) || j < i;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

namespace {

struct Search {
  const ElementSet& target;
  const std::vector<ElementSet>& candidates;
  std::vector<std::size_t> chosen;

  bool run(const ElementSet& uncovered, std::size_t budget) {
    const Elem e = uncovered.first();
    if (e == uncovered.universe()) return true;
    if (budget == 0) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!candidates[i].test(e)) continue;
      chosen.push_back(i);
      ElementSet rest = uncovered;
      rest.subtract(candidates[i]);
      if (run(rest, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> exact_cover_search(const ElementSet& target,
                                                           const std::vector<ElementSet>& candidates,
                                                           std::size_t max_size) {
  ElementSet all(target.universe());
  for (const auto& c : candidates) all |= c;
  if (!target.is_subset_of(all)) return std::nullopt;
  for (std::size_t k = 0; k <= max_size; ++k) {
    Search s{target, candidates, {}};
    if (s.run(target, k)) {
      std::sort(s.chosen.begin(), s.chosen.end());
      return s.chosen;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> greedy_cover(const ElementSet& target,
                                                     const std::vector<ElementSet>& candidates) {
  ElementSet uncovered = target;
  std::vector<std::size_t> chosen;
  while (!uncovered.empty()) {
    std::size_t best = candidates.size();
    std::size_t gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto g = (candidates[i] & uncovered).count();
      if (g > gain) {
        gain = g;
        best = i;
      }
    }
    if (best == candidates.size()) return std::nullopt;
    chosen.push_back(best);
    uncovered.subtract(candidates[best]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace avoidance::detail
