#include "mwav/generator.hpp"

#include <algorithm>
#include <numeric>

#include "mwav/rng.hpp"

namespace mwav {

namespace {

std::vector<Rational> make_utilities(const GeneratorConfig& config, Rng& rng,
                                     const std::vector<CandidateId>& preference) {
  const int m = config.m;
  std::vector<Rational> utility(m);
  if (config.utilities == UtilityScheme::kBordaLike) {
    for (int pos = 0; pos < m; ++pos) utility[preference[pos]] = Rational(m - pos);
    return utility;
  }
  // Distinct random integers, descending down the preference order, each
  // nudged by a distinct small fraction so denominators vary but strictness
  // is kept: position gaps are >= 1 while nudges stay below 1/2.
  std::vector<long long> levels(m);
  long long value = rng.range(m, 4 * m);
  for (int pos = 0; pos < m; ++pos) {
    levels[pos] = value;
    value -= rng.range(1, 3);
  }
  for (int pos = 0; pos < m; ++pos) {
    long long den = rng.range(3, 9);
    utility[preference[pos]] = Rational(levels[pos]) + Rational(1, den * (pos + 2));
  }
  return utility;
}

std::vector<Rational> make_owa(const GeneratorConfig& config, Rng& rng) {
  const int k = config.k;
  std::vector<Rational> owa(k, Rational(0));
  switch (config.owa) {
    case OwaScheme::kBest:
      owa[0] = Rational(1);
      break;
    case OwaScheme::kWorst:
      owa[k - 1] = Rational(1);
      break;
    case OwaScheme::kAdditive:
      for (int j = 0; j < k; ++j) owa[j] = Rational(1);
      break;
    case OwaScheme::kRandomFullRank: {
      int cutoff = 1 + rng.below_int(k);
      for (int j = 0; j < cutoff; ++j)
        owa[j] = Rational(rng.range(1, 4), rng.range(1, 3));
      break;
    }
    case OwaScheme::kRandomAny: {
      bool any = false;
      for (int j = 0; j < k; ++j) {
        if (rng.coin()) {
          owa[j] = Rational(rng.range(1, 4), rng.range(1, 3));
          any = true;
        }
      }
      if (!any) owa[rng.below_int(k)] = Rational(1);
      break;
    }
  }
  return owa;
}

}  // namespace

ElectionInstance generate_instance(const GeneratorConfig& config, std::uint64_t seed) {
  if (config.m < 1 || config.m > kMaxCandidates)
    throw config_error("candidate count must be in [1, " +
                       std::to_string(kMaxCandidates) + "]");
  if (config.n < 1) throw config_error("voter count must be positive");
  if (config.k < 1 || config.k > config.m)
    throw config_error("committee size must satisfy 1 <= k <= m");

  Rng rng(mix_seed(seed, 0xe1ec110e));
  std::vector<CandidateId> ranking(config.m);
  std::iota(ranking.begin(), ranking.end(), 0);
  if (config.random_priority) rng.shuffle(ranking);
  PriorityOrder priority(std::move(ranking));

  std::vector<VoterProfile> voters;
  for (int i = 0; i < config.n; ++i) {
    VoterProfile voter;
    voter.preference.resize(config.m);
    std::iota(voter.preference.begin(), voter.preference.end(), 0);
    rng.shuffle(voter.preference);
    voter.utility = make_utilities(config, rng, voter.preference);
    voter.owa = make_owa(config, rng);
    voters.push_back(std::move(voter));
  }
  return ElectionInstance(config.k, std::move(voters), std::move(priority));
}

UtilityScheme utility_scheme_from_string(const std::string& s) {
  if (s == "borda") return UtilityScheme::kBordaLike;
  if (s == "random-rational") return UtilityScheme::kRandomRational;
  throw config_error("unknown utility scheme '" + s + "'");
}

OwaScheme owa_scheme_from_string(const std::string& s) {
  if (s == "best") return OwaScheme::kBest;
  if (s == "worst") return OwaScheme::kWorst;
  if (s == "additive") return OwaScheme::kAdditive;
  if (s == "random-full-rank") return OwaScheme::kRandomFullRank;
  if (s == "random-any") return OwaScheme::kRandomAny;
  throw config_error("unknown weight scheme '" + s + "'");
}

std::string to_string(UtilityScheme s) {
  return s == UtilityScheme::kBordaLike ? "borda" : "random-rational";
}

std::string to_string(OwaScheme s) {
  switch (s) {
    case OwaScheme::kBest: return "best";
    case OwaScheme::kWorst: return "worst";
    case OwaScheme::kAdditive: return "additive";
    case OwaScheme::kRandomFullRank: return "random-full-rank";
    case OwaScheme::kRandomAny: return "random-any";
  }
  return "?";
}

}  // namespace mwav
