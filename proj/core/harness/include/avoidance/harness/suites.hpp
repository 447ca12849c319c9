#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "avoidance/avoidance.hpp"
#include "avoidance/harness/corpus.hpp"
#include "avoidance/limits.hpp"

namespace avoidance::harness {

inline constexpr const char* kEngineVersion = "0.1.0";

struct Failure {
  nlohmann::json ring;     ///< ring description the witness refers to
  nlohmann::json witness;  ///< {"operation", "args", "observed"}, replayable
};

struct TheoremEntry {
  std::string theorem_id;
  std::size_t instances_checked = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  /// Exploratory entries never fail.
  bool asserting = true;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string engine_version = kEngineVersion;
  std::vector<TheoremEntry> entries;
  /// Informational records (non-avoidance witnesses, attained bounds, probe
  /// reports), in corpus order.
  std::vector<nlohmann::json> findings;
  std::vector<std::string> notes;
  bool vacuous = false;
  bool low_diversity = false;
  /// Items skipped because they hit a resource bound.
  std::size_t skipped = 0;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const TheoremEntry* entry(std::string_view id) const;
};

struct SuiteOptions {
  unsigned jobs = 1;
  /// Minimum number of irredundant covers the mccoy suite tries to reach.
  std::size_t irredundant_covers = 500;
  std::size_t product_pairs = 100;
  std::size_t composable_pairs = 100;
  /// Homomorphisms per source ring offered to the conjecture probe.
  std::size_t probe_maps = 4;
  Limits limits = Limits::from_environment();
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownSuite.
VerificationReport run_suite(const Corpus& corpus, std::string_view suite, const SuiteOptions& options = {});

/// Timing is left out unless requested, so reports compare byte for byte.
nlohmann::json to_json(const VerificationReport& report, bool timing = false);

/// Re-runs the operation named in a witness against the ring description
/// and returns the fresh observation.
nlohmann::json replay_witness(const nlohmann::json& ring, const nlohmann::json& witness,
                              const Limits& limits = Limits::from_environment());

/// Probe sources into `target`: the identity, the prime subring, subrings
/// generated by single elements, and homomorphisms from the given rings.
/// At most `samples` maps, in a deterministic order.
std::vector<ProbeSource> conjecture_sources(const Ring& target, const std::vector<RingDescription>& from,
                                            std::size_t samples, const Limits& limits = {});

nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const McCoyResult& result);

}  // namespace avoidance::harness
