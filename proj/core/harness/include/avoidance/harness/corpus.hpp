#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "avoidance/description.hpp"

namespace avoidance::harness {

/// Portable deterministic generator: mt19937_64 with an explicit bounded
/// draw, so sequences do not depend on the standard library's
/// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  /// log-uniform integer in [1, hi].
  std::uint64_t log_uniform(std::uint64_t hi);
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 gen_;
};

/// Child seed for stream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Relative weights of the random ring constructors.
struct ConstructorMix {
  unsigned zmod = 2;
  unsigned product = 2;
  unsigned poly_quotient = 3;
  unsigned quotient = 2;
  unsigned idealization = 2;
};

struct CorpusParams {
  std::size_t max_ring_size = 256;
  /// Random rings, on top of the golden set.
  std::size_t count = 50;
  ConstructorMix mix;
  /// Random (ring, module) pairs and graded algebras; negative selects
  /// count / 2.
  std::ptrdiff_t module_count = -1;
  std::ptrdiff_t graded_count = -1;
};

struct ModuleSpec {
  RingDescription ring;
  ModuleDescription module;
};

struct Corpus {
  std::uint64_t seed = 0;
  CorpusParams params;
  std::vector<RingDescription> specs;
  std::vector<ModuleSpec> modules;
  /// Graded algebras (RingDescriptions of kind graded).
  std::vector<RingDescription> graded;
  /// Generator parameters, for replay.
  nlohmann::json provenance;
  /// No polynomial quotients in the mix: nearly everything is a PIR.
  bool low_diversity = false;

  [[nodiscard]] bool empty() const noexcept { return specs.empty() && modules.empty() && graded.empty(); }
};

/// Z/12, F2[x,y]/m^2, F2[x]/(x^3), F2 x F3, F3[x,y]/m^2.
std::vector<RingDescription> golden_rings();
std::vector<ModuleSpec> golden_modules();
std::vector<RingDescription> golden_graded();

/// Deterministic in (seed, params). Throws SizeBound when max_ring_size
/// exceeds the global element bound.
Corpus generate_corpus(std::uint64_t seed, const CorpusParams& params = {});

nlohmann::json to_json(const Corpus& corpus);

}  // namespace avoidance::harness
