#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace avoidance {

struct RingDescription;
struct ModuleDescription;
using DescPtr = std::shared_ptr<const RingDescription>;
using ModuleDescPtr = std::shared_ptr<const ModuleDescription>;

// Module recipes (over the ring they are attached to).

struct FreeModule {
  unsigned rank = 0;
};
/// (R/m)^power for a maximal ideal m given by generators (element names of R).
struct ResiduePower {
  std::vector<std::string> maximal;
  unsigned power = 1;
};
/// A quotient of another module by the submodule spanned by the given
/// element names of that module.
struct ModuleQuotient {
  ModuleDescPtr module;
  std::vector<std::string> generators;
};

struct ModuleDescription {
  std::variant<FreeModule, ResiduePower, ModuleQuotient> node;
};

// Ring recipes.

struct ZMod {
  std::uint64_t n = 2;
};
/// GF(p^k) as F_p[a]/(modulus). `modulus` lists coefficients from the
/// constant term up and must be monic of degree k; empty selects the first
/// irreducible monic polynomial in lexicographic coefficient order.
struct GaloisField {
  std::uint64_t p = 2;
  unsigned k = 1;
  std::vector<std::int64_t> modulus;
};
struct Product {
  std::vector<RingDescription> factors;
};
/// base[vars] / (monomials of total degree >= truncation, relations).
struct PolyQuotient {
  DescPtr base;
  std::vector<std::string> vars;
  unsigned truncation = 1;
  std::vector<std::string> relations;
};
struct GradedVar {
  std::string name;
  unsigned degree = 1;
  friend bool operator==(const GradedVar&, const GradedVar&) = default;
};
/// Like PolyQuotient, but with weighted variables, homogeneous relations
/// and truncation by weighted degree.
struct Graded {
  DescPtr field;
  std::vector<GradedVar> vars;
  unsigned truncation = 1;
  std::vector<std::string> relations;
};
struct Quotient {
  DescPtr ring;
  std::vector<std::string> generators;
};
struct Idealization {
  DescPtr ring;
  ModuleDescription module;
};

struct RingDescription {
  std::variant<ZMod, GaloisField, Product, PolyQuotient, Graded, Quotient, Idealization> node;
};

/// Compact canonical text of a description (the compact JSON encoding).
std::string to_string(const RingDescription& desc);
std::string to_string(const ModuleDescription& desc);

bool operator==(const RingDescription& a, const RingDescription& b);
bool operator==(const ModuleDescription& a, const ModuleDescription& b);

namespace desc {

RingDescription zmod(std::uint64_t n);
RingDescription gf(std::uint64_t p, unsigned k = 1, std::vector<std::int64_t> modulus = {});
RingDescription product(std::vector<RingDescription> factors);
RingDescription poly_quotient(RingDescription base, std::vector<std::string> vars, unsigned truncation,
                              std::vector<std::string> relations = {});
RingDescription graded(RingDescription field, std::vector<GradedVar> vars, unsigned truncation,
                       std::vector<std::string> relations = {});
RingDescription quotient(RingDescription ring, std::vector<std::string> generators);
RingDescription idealization(RingDescription ring, ModuleDescription module);

ModuleDescription free_module(unsigned rank);
ModuleDescription residue_power(std::vector<std::string> maximal, unsigned power);
ModuleDescription module_quotient(ModuleDescription module, std::vector<std::string> generators);

}  // namespace desc
}  // namespace avoidance
