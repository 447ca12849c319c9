#pragma once

// Brute-force reference implementations. They work straight from the ring
// tables and definitions and share no code with the engine's algorithms,
// so agreement between the two is meaningful.

#include <cstdint>
#include <optional>
#include <vector>

#include "avoidance/element_set.hpp"
#include "avoidance/module.hpp"
#include "avoidance/ring.hpp"

namespace oracle {

using avoidance::Elem;
using avoidance::ElementSet;
using avoidance::Module;
using avoidance::Ring;

/// Every additive subgroup, found by adjoining one element at a time and
/// closing under addition.
std::vector<ElementSet> additive_subgroups(const Ring& ring);

/// Additive subgroups closed under multiplication by every ring element.
std::vector<ElementSet> ideals(const Ring& ring);

/// R x, as a set.
ElementSet principal(const Ring& ring, Elem x);

/// Closure of {r g} under addition.
ElementSet generated(const Ring& ring, const std::vector<Elem>& generators);

bool is_principal(const Ring& ring, const ElementSet& ideal);

/// Every finite family of ideals covering `target` has a member containing
/// it. Families range over all subsets of `lattice`; a cover by arbitrary
/// ideals can be replaced by one from the lattice, so this is the definition
/// verbatim. Only feasible for small lattices.
bool has_avoidance(const ElementSet& target, const std::vector<ElementSet>& lattice);

/// Smallest family of ideals not containing `target` whose union covers it,
/// by increasing family size. Members are lattice indices.
std::optional<std::vector<std::size_t>> min_cover(const ElementSet& target, const std::vector<ElementSet>& lattice);

/// Each subideal J of `a` equals a K for some ideal K (an exhaustive search
/// over K).
bool is_multiplication_ideal(const Ring& ring, const ElementSet& a, const std::vector<ElementSet>& lattice);

/// Smallest number of elements generating `target` as an ideal, searching
/// subsets of `target` up to size `max_size`.
std::optional<std::size_t> min_generating_set_size(const Ring& ring, const ElementSet& target, std::size_t max_size);

/// Submodules by the same adjoin-and-close enumeration as ideals.
std::vector<ElementSet> submodules(const Module& module);

bool module_is_cyclic(const Module& module);

/// Definition of avoidance for the whole module over its submodule lattice.
bool module_has_avoidance(const Module& module);

/// The ring axioms as table identities over every triple.
bool satisfies_ring_axioms(const Ring& ring);

/// Brute-force bijection search preserving addition and multiplication.
bool isomorphic(const Ring& a, const Ring& b);

/// `target` lies inside the union of the family.
bool covers(const ElementSet& target, const std::vector<ElementSet>& family);

/// Whether every multiple j * ideal with 1 <= j <= horizon is divisible by
/// some member of the family.
bool z_cover_by_residues(std::uint64_t ideal, const std::vector<std::uint64_t>& family, std::uint64_t horizon);

}  // namespace oracle
