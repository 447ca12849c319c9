#include <utility>

#include "avoidance/description.hpp"
#include "avoidance/error.hpp"
#include "avoidance/serialize.hpp"

namespace avoidance {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  const auto& v = j.at(field);
  if (!v.is_array()) fail(ErrorKind::MalformedDescription, std::string("'") + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (e.is_string()) {
      out.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      out.push_back(std::to_string(e.get<std::int64_t>()));
    } else {
      fail(ErrorKind::MalformedDescription, std::string("'") + field + "' entries must be strings");
    }
  }
  return out;
}

template <typename T>
T number(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    fail(ErrorKind::MalformedDescription, std::string("missing integer field '") + field + "'");
  const auto v = j.at(field).get<std::int64_t>();
  if (v < 0) fail(ErrorKind::MalformedDescription, std::string("field '") + field + "' must be nonnegative");
  return static_cast<T>(v);
}

const json& child(const json& j, const char* field) {
  if (!j.contains(field)) fail(ErrorKind::MalformedDescription, std::string("missing field '") + field + "'");
  return j.at(field);
}

}  // namespace

json to_json(const ModuleDescription& desc) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FreeModule>) {
          return {{"kind", "free"}, {"rank", node.rank}};
        } else if constexpr (std::is_same_v<T, ResiduePower>) {
          return {{"kind", "residue_power"}, {"maximal", node.maximal}, {"power", node.power}};
        } else {
          return {{"kind", "quotient"}, {"module", to_json(*node.module)}, {"generators", node.generators}};
        }
      },
      desc.node);
}

ModuleDescription module_description_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(ErrorKind::MalformedDescription, "module description needs a string 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "free") return desc::free_module(number<unsigned>(j, "rank"));
  if (kind == "residue_power") return desc::residue_power(string_list(j, "maximal"), number<unsigned>(j, "power"));
  if (kind == "quotient")
    return desc::module_quotient(module_description_from_json(child(j, "module")), string_list(j, "generators"));
  fail(ErrorKind::MalformedDescription, "unknown module kind '" + kind + "'");
}

json to_json(const RingDescription& desc) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZMod>) {
          return {{"kind", "zmod"}, {"n", node.n}};
        } else if constexpr (std::is_same_v<T, GaloisField>) {
          json j = {{"kind", "gf"}, {"p", node.p}, {"k", node.k}};
          if (!node.modulus.empty()) j["modulus"] = node.modulus;
          return j;
        } else if constexpr (std::is_same_v<T, Product>) {
          json factors = json::array();
          for (const auto& f : node.factors) factors.push_back(to_json(f));
          return {{"kind", "product"}, {"factors", factors}};
        } else if constexpr (std::is_same_v<T, PolyQuotient>) {
          return {{"kind", "poly_quotient"},
                  {"base", to_json(*node.base)},
                  {"vars", node.vars},
                  {"truncation", node.truncation},
                  {"relations", node.relations}};
        } else if constexpr (std::is_same_v<T, Graded>) {
          json vars = json::array();
          for (const auto& v : node.vars) vars.push_back({{"name", v.name}, {"degree", v.degree}});
          return {{"kind", "graded"},
                  {"field", to_json(*node.field)},
                  {"vars", vars},
                  {"truncation", node.truncation},
                  {"relations", node.relations}};
        } else if constexpr (std::is_same_v<T, Quotient>) {
          return {{"kind", "quotient"}, {"ring", to_json(*node.ring)}, {"generators", node.generators}};
        } else {
          return {{"kind", "idealization"}, {"ring", to_json(*node.ring)}, {"module", to_json(node.module)}};
        }
      },
      desc.node);
}

RingDescription ring_description_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::MalformedDescription, "ring description must be a JSON object");
  if (!j.contains("kind") && j.contains("graded")) {
    json inner = j.at("graded");
    inner["kind"] = "graded";
    return ring_description_from_json(inner);
  }
  if (!j.contains("kind") || !j.at("kind").is_string())
    fail(ErrorKind::MalformedDescription, "ring description needs a string 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zmod") return desc::zmod(number<std::uint64_t>(j, "n"));
  if (kind == "gf") {
    std::vector<std::int64_t> modulus;
    if (j.contains("modulus")) {
      if (!j.at("modulus").is_array()) fail(ErrorKind::MalformedDescription, "'modulus' must be an array");
      for (const auto& c : j.at("modulus")) {
        if (!c.is_number_integer()) fail(ErrorKind::MalformedDescription, "'modulus' entries must be integers");
        modulus.push_back(c.get<std::int64_t>());
      }
    }
    return desc::gf(number<std::uint64_t>(j, "p"), j.contains("k") ? number<unsigned>(j, "k") : 1U,
                    std::move(modulus));
  }
  if (kind == "product") {
    const auto& f = child(j, "factors");
    if (!f.is_array()) fail(ErrorKind::MalformedDescription, "'factors' must be an array");
    std::vector<RingDescription> factors;
    for (const auto& e : f) factors.push_back(ring_description_from_json(e));
    return desc::product(std::move(factors));
  }
  if (kind == "poly_quotient") {
    return desc::poly_quotient(ring_description_from_json(child(j, "base")), string_list(j, "vars"),
                               number<unsigned>(j, "truncation"), string_list(j, "relations"));
  }
  if (kind == "graded") {
    std::vector<GradedVar> vars;
    const auto& v = child(j, "vars");
    if (!v.is_array()) fail(ErrorKind::MalformedDescription, "'vars' must be an array");
    for (const auto& e : v) {
      if (e.is_string()) {
        vars.push_back({e.get<std::string>(), 1});
      } else {
        if (!e.is_object() || !e.contains("name") || !e.at("name").is_string())
          fail(ErrorKind::MalformedDescription, "graded var needs a 'name'");
        vars.push_back({e.at("name").get<std::string>(), e.contains("degree") ? number<unsigned>(e, "degree") : 1U});
      }
    }
    return desc::graded(ring_description_from_json(child(j, "field")), std::move(vars),
                        number<unsigned>(j, "truncation"), string_list(j, "relations"));
  }
  if (kind == "quotient")
    return desc::quotient(ring_description_from_json(child(j, "ring")), string_list(j, "generators"));
  if (kind == "idealization")
    return desc::idealization(ring_description_from_json(child(j, "ring")),
                              module_description_from_json(child(j, "module")));
  fail(ErrorKind::MalformedDescription, "unknown ring kind '" + kind + "'");
}

std::string to_string(const RingDescription& desc) { return to_json(desc).dump(); }
std::string to_string(const ModuleDescription& desc) { return to_json(desc).dump(); }

bool operator==(const RingDescription& a, const RingDescription& b) { return to_json(a) == to_json(b); }
bool operator==(const ModuleDescription& a, const ModuleDescription& b) { return to_json(a) == to_json(b); }

namespace desc {

RingDescription zmod(std::uint64_t n) { return {ZMod{n}}; }
RingDescription gf(std::uint64_t p, unsigned k, std::vector<std::int64_t> modulus) {
  return {GaloisField{p, k, std::move(modulus)}};
}
RingDescription product(std::vector<RingDescription> factors) { return {Product{std::move(factors)}}; }
RingDescription poly_quotient(RingDescription base, std::vector<std::string> vars, unsigned truncation,
                              std::vector<std::string> relations) {
  return {PolyQuotient{std::make_shared<const RingDescription>(std::move(base)), std::move(vars), truncation,
                       std::move(relations)}};
}
RingDescription graded(RingDescription field, std::vector<GradedVar> vars, unsigned truncation,
                       std::vector<std::string> relations) {
  return {Graded{std::make_shared<const RingDescription>(std::move(field)), std::move(vars), truncation,
                 std::move(relations)}};
}
RingDescription quotient(RingDescription ring, std::vector<std::string> generators) {
  return {Quotient{std::make_shared<const RingDescription>(std::move(ring)), std::move(generators)}};
}
RingDescription idealization(RingDescription ring, ModuleDescription module) {
  return {Idealization{std::make_shared<const RingDescription>(std::move(ring)), std::move(module)}};
}

ModuleDescription free_module(unsigned rank) { return {FreeModule{rank}}; }
ModuleDescription residue_power(std::vector<std::string> maximal, unsigned power) {
  return {ResiduePower{std::move(maximal), power}};
}
ModuleDescription module_quotient(ModuleDescription module, std::vector<std::string> generators) {
  return {ModuleQuotient{std::make_shared<const ModuleDescription>(std::move(module)), std::move(generators)}};
}

}  // namespace desc
}  // namespace avoidance
