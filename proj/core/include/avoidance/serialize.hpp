#pragma once

#include <nlohmann/json.hpp>

#include "avoidance/description.hpp"
#include "avoidance/ideal.hpp"

namespace avoidance {

/// Canonical JSON encoding of ring descriptions. Every node is an object
/// with a "kind" field:
///   {"kind":"zmod","n":12}
///   {"kind":"gf","p":2,"k":2,"modulus":[1,1,1]}
///   {"kind":"product","factors":[...]}
///   {"kind":"poly_quotient","base":{...},"vars":["x","y"],"truncation":2,"relations":["x^2"]}
///   {"kind":"graded","field":{...},"vars":[{"name":"x","degree":1}],"truncation":3,"relations":[]}
///   {"kind":"quotient","ring":{...},"generators":["4"]}
///   {"kind":"idealization","ring":{...},"module":{...}}
/// The wrapper form {"graded":{...}} is accepted on input.
nlohmann::json to_json(const RingDescription& desc);
RingDescription ring_description_from_json(const nlohmann::json& j);

/// {"kind":"free","rank":2}
/// {"kind":"residue_power","maximal":["2"],"power":2}
/// {"kind":"quotient","module":{...},"generators":["(1,0)"]}
nlohmann::json to_json(const ModuleDescription& desc);
ModuleDescription module_description_from_json(const nlohmann::json& j);

/// Sorted (by element index) list of element names.
nlohmann::json to_json(const Ideal& ideal);
/// {"ring":..., "ideals":[{"label":..., "members":[...]}], "covers":[[j, ...], ...]}
/// where covers[i] lists the indices of the ideals directly above ideal i.
nlohmann::json to_json(const IdealLattice& lattice);

}  // namespace avoidance
