#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "avoidance/element_set.hpp"

namespace avoidance::detail {

/// Drops candidates contained in another candidate (keeping the first of
/// equal ones). Returns surviving indices in input order.
std::vector<std::size_t> maximal_candidates(const std::vector<ElementSet>& candidates);

/// Smallest subfamily (indices into `candidates`) whose union contains
/// `target`, of size at most `max_size`. Branches on the lowest uncovered
/// element, so the search is exact. Returns nullopt if none exists.
std::optional<std::vector<std::size_t>> exact_cover_search(const ElementSet& target,
                                                           const std::vector<ElementSet>& candidates,
                                                           std::size_t max_size);

/// Greedy largest-gain cover; nullopt when the union misses `target`.
std::optional<std::vector<std::size_t>> greedy_cover(const ElementSet& target,
                                                     const std::vector<ElementSet>& candidates);

}  // namespace avoidance::detail
