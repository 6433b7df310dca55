#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mwav/strategy.hpp"

namespace mwav {

enum class EquilibriumKind { kPlain, kLazy, kSincere };

// What was checked for one voter when a profile verified.
struct VoterEvidence {
  Rational utility;     // utility of the standing outcome
  Rational achievable;  // best-response optimum against the others
  int ballot_size = 0;
  int mbr_size = 0;
  bool sincere = false;
};

struct EquilibriumCertificate {
  Committee committee;
  BallotProfile profile;
  EquilibriumKind kind = EquilibriumKind::kPlain;
  std::vector<VoterEvidence> evidence;
};

enum class ViolationKind {
  kBetterBallot,             // a strictly improving deviation exists
  kShorterBrExists,          // lazy: same utility with a smaller ballot
  kSincereBrExistsElsewhere  // truth-bias: the ballot is insincere but a sincere BR exists
};

struct DeviationWitness {
  int voter = -1;
  Ballot alternate;
  Rational old_utility;
  Rational new_utility;  // equals old_utility for the two tendency violations
  ViolationKind kind = ViolationKind::kBetterBallot;
};

using VerifyResult = std::variant<EquilibriumCertificate, DeviationWitness>;

bool verified(const VerifyResult& r);
const EquilibriumCertificate& certificate(const VerifyResult& r);
const DeviationWitness& witness(const VerifyResult& r);

// Checks the profile voter by voter: plain requires every ballot to attain
// its best-response optimum, lazy additionally requires minimal size, and
// sincere requires a sincere optimal ballot. Returns a concrete deviation
// witness on failure.
VerifyResult verify_equilibrium(const ElectionInstance& instance, const RuleSpec& rule,
                                const BallotProfile& profile, EquilibriumKind kind);

struct EnumerationOptions {
  std::uint64_t profile_cap = 1ull << 24;
  bool parallel = true;
};

struct EnumerationResult {
  std::vector<EquilibriumCertificate> certificates;  // sorted by profile
  std::vector<Committee> committees;                 // distinct, ascending mask
  std::uint64_t profiles_scanned = 0;
};

// Verifies every profile in the (2^m)^n space. Memoizes per-voter
// best-response summaries keyed by the others-profile when that table fits.
EnumerationResult enumerate_equilibria(const ElectionInstance& instance,
                                       const RuleSpec& rule, EquilibriumKind kind,
                                       const EnumerationOptions& options = {});

// Minimal, obviously-correct serial enumeration used as the reference oracle
// in tests; no memoization, no threading.
EnumerationResult enumerate_equilibria_reference(const ElectionInstance& instance,
                                                 const RuleSpec& rule,
                                                 EquilibriumKind kind,
                                                 std::uint64_t profile_cap = 1ull << 24);

// Lazy-equilibrium enumeration over the score-constrained profile space only:
// pairwise-disjoint ballots whose union has at most k candidates, each with a
// single approval. Requires standard AV; agrees with the naive enumerator.
EnumerationResult enumerate_lazy_pruned(const ElectionInstance& instance,
                                        const RuleSpec& rule,
                                        const EnumerationOptions& options = {});

// Score facts that every lazy certificate must satisfy: zero approvals
// outside the committee and at most one approval inside it.
bool lazy_score_facts_hold(const ElectionInstance& instance, const BallotProfile& profile,
                           Committee committee);

enum class LazyDichotomy { kContainsIdeal, kInsideIdeal, kViolation };

// Places a lazy certificate on the contains-ideal / inside-ideal dichotomy.
// Refuses on instances with a non-full-rank voter, where the dichotomy does
// not apply.
LazyDichotomy classify_lazy_dichotomy(const ElectionInstance& instance,
                                      const EquilibriumCertificate& cert);

// Builds a lazy equilibrium containing the whole ideal union (requires
// |ideal union| <= k): walks the ideal union from lowest priority upward,
// assigning one approving voter wherever the remaining prefix is not already
// elected by priority alone, then verifies the result.
EquilibriumCertificate construct_containment_pne(const ElectionInstance& instance,
                                                 const RuleSpec& rule);

struct SigmaCheck {
  bool passed = true;
  std::string detail;
};

// For a lazy certificate with committee strictly inside the ideal union:
// checks that the lowest-priority winner sits below priority rank k and that
// every voter deriving utility from it prefers it to every unelected
// higher-priority candidate.
SigmaCheck check_sigma_condition(const ElectionInstance& instance,
                                 const EquilibriumCertificate& cert);

// Single-winner characterisation: the committees {c} such that either c is
// every voter's first preference, or c is some voter's first preference and
// unanimously preferred to every candidate with higher priority. Must equal
// the enumerated lazy equilibria.
std::vector<Committee> k1_characterization(const ElectionInstance& instance,
                                           const RuleSpec& rule);

// Builds a sincere equilibrium for n > m under standard AV: k pigeonhole
// rounds pick winners that are the current first preference of at least two
// voters; each voter then approves their longest preference prefix inside the
// winner set, so every winner has two or more approvals, every other
// candidate none, and every ballot is sincere. With require_nonempty, voters
// left with an empty ballot approve the full candidate set instead, which
// shifts every score equally. The result is verified before being returned.
EquilibriumCertificate construct_sincere_pne(const ElectionInstance& instance,
                                             const RuleSpec& rule,
                                             bool require_nonempty = false);

// Sum of all voters' committee utilities. Only meaningful when the caller
// treats utilities as comparable across voters.
Rational welfare(const ElectionInstance& instance, Committee committee);
Rational welfare(const ElectionInstance& instance, const EquilibriumCertificate& cert);

}  // namespace mwav
