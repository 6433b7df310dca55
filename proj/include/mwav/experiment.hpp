#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwav/generator.hpp"
#include "mwav/rules.hpp"

namespace mwav {

// Batch analysis over generated instances. Identical (config, seed) pairs
// produce byte-identical machine reports.
struct ExperimentConfig {
  int m_min = 3, m_max = 4;
  int n_min = 3, n_max = 4;
  int k_min = 1, k_max = 2;
  int count = 10;
  std::uint64_t seed = 1;
  UtilityScheme utilities = UtilityScheme::kBordaLike;
  OwaScheme owa = OwaScheme::kRandomFullRank;
  RuleKind rule = RuleKind::kStandardAv;
  std::optional<int> restriction;  // fixed limit for best-response analyses
  // Any subset of: "br-stats", "restriction-sweep", "lazy-existence",
  // "sincere-existence", "welfare".
  std::vector<std::string> analyses;

  static ExperimentConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct Report {
  std::string machine;  // JSON document with a schema tag; embeds certificates
  std::string human;    // plain-text rendering of the same content
};

Report run_experiment(const ExperimentConfig& config, bool parallel = true);

}  // namespace mwav
