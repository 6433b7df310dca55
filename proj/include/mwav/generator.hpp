#pragma once

#include <cstdint>
#include <string>

#include "mwav/model.hpp"

namespace mwav {

enum class UtilityScheme {
  kBordaLike,       // m, m-1, ..., 1 down the preference order
  kRandomRational   // distinct random integers with a distinct fractional nudge
};

enum class OwaScheme {
  kBest,            // (1, 0, ..., 0): only the top committee member counts
  kWorst,           // (0, ..., 0, 1): only the bottom committee member counts
  kAdditive,        // (1, ..., 1): plain sum over the committee
  kRandomFullRank,  // random cutoff, strictly positive weights up to it
  kRandomAny        // nonnegative weights, at least one positive
};

struct GeneratorConfig {
  int m = 3;
  int n = 3;
  int k = 1;
  UtilityScheme utilities = UtilityScheme::kBordaLike;
  OwaScheme owa = OwaScheme::kAdditive;
  bool random_priority = true;  // otherwise identity order
};

// Deterministic in (config, seed). Preferences are uniform permutations,
// utilities are distinct by construction, weight vectors follow the scheme.
ElectionInstance generate_instance(const GeneratorConfig& config, std::uint64_t seed);

UtilityScheme utility_scheme_from_string(const std::string& s);
OwaScheme owa_scheme_from_string(const std::string& s);
std::string to_string(UtilityScheme s);
std::string to_string(OwaScheme s);

}  // namespace mwav
