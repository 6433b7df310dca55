#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mwav/rules.hpp"

namespace mwav {

// An upper bound on ballot size. Limits at or above the candidate count
// behave as no restriction at all.
class LengthRestriction {
 public:
  LengthRestriction() = default;  // unrestricted
  explicit LengthRestriction(int limit) : limit_(limit) {
    if (limit < 0) throw contract_error("ballot-length limit must be >= 0");
  }
  static LengthRestriction unrestricted() { return LengthRestriction(); }

  bool is_restricted(int m) const { return limit_ >= 0 && limit_ < m; }
  int effective_limit(int m) const { return is_restricted(m) ? limit_ : m; }
  int raw_limit() const { return limit_; }  // -1 when unrestricted

 private:
  int limit_ = -1;
};

constexpr int kDefaultBruteForceCap = 12;  // candidates; 4096-ballot scans

struct BestResponseReport {
  Rational achievable_utility;       // optimum over the unrestricted ballot space
  Rational restricted_utility;       // optimum over valid ballots; == achievable when unrestricted
  std::vector<Ballot> br_ballots;    // all valid maximizers, ascending mask order
  int mbr_size = 0;                  // minimum |ballot| among br_ballots
  std::vector<Ballot> mbr_ballots;   // the minimum-size maximizers
};

struct BestResponseSummary {
  Rational achievable;
  int mbr_size = 0;
};

// Exhaustive scan of the voter's ballot space against the fixed ballots of
// everyone else. `others` is a full profile whose entry at voter_index is
// ignored. Ballots larger than the restriction are excluded from the
// best-response set but still inform achievable_utility.
BestResponseReport brute_force_best_responses(
    const ElectionInstance& instance, const RuleSpec& rule, int voter_index,
    const BallotProfile& others,
    LengthRestriction restriction = LengthRestriction::unrestricted(),
    int brute_force_cap = kDefaultBruteForceCap);

// Achievable utility and minimal best-response size only; the fast path used
// by equilibrium verification and enumeration. The overload taking a
// UtilityTable and precomputed approval counts of the other voters avoids all
// per-call allocation.
BestResponseSummary best_response_summary(
    const ElectionInstance& instance, const RuleSpec& rule, int voter_index,
    const BallotProfile& others, int brute_force_cap = kDefaultBruteForceCap);
BestResponseSummary best_response_summary(const ElectionInstance& instance,
                                          const RuleSpec& rule,
                                          const UtilityTable& utilities,
                                          int voter_index, const int* base_approvals);

// Deterministic representative: the size of a minimal best response and the
// minimum-size maximizer whose members come earliest in the priority order.
std::pair<int, Ballot> minimal_best_response(
    const ElectionInstance& instance, const RuleSpec& rule, int voter_index,
    const BallotProfile& others,
    LengthRestriction restriction = LengthRestriction::unrestricted(),
    int brute_force_cap = kDefaultBruteForceCap);

// True iff the ballot is a top prefix of the voter's preference order
// (the empty ballot and the full candidate set both qualify).
bool is_sincere(const ElectionInstance& instance, int voter_index, Ballot ballot);

struct SincereBestResponse {
  Ballot ballot;                     // shortest best preference prefix
  Rational utility;
  bool attains_unrestricted = true;  // prefix optimum == unrestricted optimum
};

// Scans the m+1 preference prefixes (only those within the restriction) and
// returns the shortest one with maximal utility.
SincereBestResponse sincere_best_response(
    const ElectionInstance& instance, const RuleSpec& rule, int voter_index,
    const BallotProfile& others,
    LengthRestriction restriction = LengthRestriction::unrestricted());

// Extends a best-response ballot to a sincere one by approving, most
// preferred first, every candidate ranked above the ballot's least-preferred
// member. Each addition must leave the outcome utility unchanged; a change
// raises invariant_error and indicates a rule that is not monotonically
// robust. Templated so tests can drive it with injected rules.
template <typename ElectFn>
Ballot sincere_completion_with(const ElectionInstance& instance, ElectFn&& elect_fn,
                               int voter_index, const BallotProfile& others,
                               Ballot best_response) {
  if (best_response.empty()) return best_response;
  BallotProfile profile = others;
  profile[voter_index] = best_response;
  const Rational target =
      instance.owa_utility(voter_index, detail::run_elect(instance, elect_fn, profile));

  int last_rank = -1;
  for (CandidateId c : best_response)
    if (instance.preference_rank(voter_index, c) > last_rank)
      last_rank = instance.preference_rank(voter_index, c);

  Ballot ballot = best_response;
  const auto& pref = instance.voter(voter_index).preference;
  for (int pos = 0; pos < last_rank; ++pos) {
    CandidateId c = pref[pos];
    if (ballot.contains(c)) continue;
    ballot.add(c);
    profile[voter_index] = ballot;
    Rational u =
        instance.owa_utility(voter_index, detail::run_elect(instance, elect_fn, profile));
    if (u != target)
      throw invariant_error(
          "sincere completion changed the outcome utility; the rule is not "
          "monotonically robust");
  }
  return ballot;
}

Ballot sincere_completion(const ElectionInstance& instance, const RuleSpec& rule,
                          int voter_index, const BallotProfile& others,
                          Ballot best_response);

enum class WitnessMode {
  kSynthesizePriority,  // try the canonical empty-profile witness first
  kFixedPriority        // search others-profiles under the instance's order
};

struct ConstrainingWitness {
  BallotProfile others;          // full profile; the voter's slot is empty
  PriorityOrder priority;        // tie-breaking order under which the gap holds
  Rational unrestricted_utility;
  Rational restricted_utility;
  Rational gap;                  // unrestricted - restricted, strictly positive
  bool canonical = false;        // produced by the synthesized-priority construction
};

struct ConstrainingSearch {
  std::optional<ConstrainingWitness> witness;
  bool exhaustive = false;  // the fallback enumeration covered the whole space
  unsigned long long profiles_tried = 0;
};

// Looks for a situation in which every best-response ballot of the voter
// exceeds the length limit, i.e. the restriction costs the voter utility
// under some fixed ballots of the others. The canonical construction ranks
// all candidates outside the voter's ideal set above it and leaves every
// other ballot empty; the fallback enumerates others-profiles under the
// instance's own priority, up to `budget` profiles.
ConstrainingSearch constraining_witness(const ElectionInstance& instance,
                                        const RuleSpec& rule, int voter_index,
                                        int restriction_limit,
                                        WitnessMode mode = WitnessMode::kSynthesizePriority,
                                        unsigned long long budget = 1ull << 20);

}  // namespace mwav
