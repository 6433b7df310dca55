#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mwav/model.hpp"
#include "mwav/rng.hpp"

namespace mwav {

enum class RuleKind { kStandardAv, kCandidateWeighted };

// A best-k approval scoring rule. Standard AV scores a candidate by its
// approval count; the weighted variant multiplies the count by a fixed
// positive per-candidate weight. Ties are broken by the instance's priority
// order in both cases.
struct RuleSpec {
  RuleKind kind = RuleKind::kStandardAv;
  std::vector<Rational> weights;  // by candidate id; used only when weighted

  static RuleSpec standard_av() { return RuleSpec{}; }
  static RuleSpec candidate_weighted(std::vector<Rational> weights);
};

struct ScoreTable {
  std::vector<int> approvals;     // s(c): number of ballots approving c
  std::vector<Rational> score;    // f(c): rule score
};

ScoreTable approval_scores(const ElectionInstance& instance, const RuleSpec& rule,
                           const BallotProfile& profile);

// Elects the k candidates ranked highest by (score, then priority).
Committee elect(const ElectionInstance& instance, const RuleSpec& rule,
                const BallotProfile& profile);

// Same, from precomputed approval counts; `approvals` must have m entries.
// This is the hot path used by ballot-space scans.
Committee elect_from_approvals(const ElectionInstance& instance, const RuleSpec& rule,
                               const int* approvals);

struct MonotonicityCounterexample {
  BallotProfile profile;
  BallotProfile altered_profile;
  CandidateId candidate = -1;  // tracked (rrm) or reinforced (robustness) candidate
  int voter = -1;              // whose ballot was reinforced; -1 for rrm
  Committee before;
  Committee after;
};

struct MonotonicityResult {
  bool passed = true;
  long long trials = 0;
  std::optional<MonotonicityCounterexample> counterexample;
};

namespace detail {

inline void count_approvals(const BallotProfile& profile, int m, int* out) {
  for (int c = 0; c < m; ++c) out[c] = 0;
  for (const Ballot& b : profile)
    for (CandidateId c : b) ++out[c];
}

template <typename ElectFn>
Committee run_elect(const ElectionInstance& instance, ElectFn&& fn,
                    const BallotProfile& profile) {
  return fn(instance, profile);
}

}  // namespace detail

// Samples (profile, winner, weakened-rivals profile) triples satisfying the
// relative-rank hypothesis -- the tracked winner's approval count never drops
// while every rival's never rises -- and checks the winner stays elected.
// Templated over the electing function so tests can inject broken rules.
// Trials derive per-index seeds, so partitioning them across workers cannot
// change which counterexample (the lowest-index one) gets reported.
template <typename ElectFn>
MonotonicityResult check_relative_rank_monotonicity(const ElectionInstance& instance,
                                                    ElectFn&& elect_fn,
                                                    long long trials,
                                                    std::uint64_t seed,
                                                    bool parallel = true) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  long long first_bad = -1;
  MonotonicityCounterexample bad;

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    BallotProfile profile(n);
    for (int i = 0; i < n; ++i)
      profile[i] = Ballot::from_mask(static_cast<std::uint32_t>(rng.below(1ull << m)));
    Committee w = detail::run_elect(instance, elect_fn, profile);
    CandidateId tracked = -1;
    int pick = rng.below_int(w.size());
    for (CandidateId c : w)
      if (pick-- == 0) tracked = c;

    BallotProfile altered(n);
    for (int i = 0; i < n; ++i) {
      Ballot b;
      for (CandidateId c : profile[i])
        if (c == tracked || rng.coin()) b.add(c);
      if (!profile[i].contains(tracked) && rng.coin()) b.add(tracked);
      altered[i] = b;
    }
    Committee w2 = detail::run_elect(instance, elect_fn, altered);
    if (!w2.contains(tracked)) {
#pragma omp critical
      {
        if (first_bad < 0 || t < first_bad) {
          first_bad = t;
          bad = MonotonicityCounterexample{profile, altered, tracked, -1, w, w2};
        }
      }
    }
  }

  MonotonicityResult result;
  result.trials = trials;
  if (first_bad >= 0) {
    result.passed = false;
    result.counterexample = bad;
  }
  return result;
}

// Samples single-candidate reinforcements and checks the committee either
// stays put or changes only by admitting the reinforced candidate in place of
// one incumbent.
template <typename ElectFn>
MonotonicityResult check_monotonic_robustness(const ElectionInstance& instance,
                                              ElectFn&& elect_fn, long long trials,
                                              std::uint64_t seed, bool parallel = true) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  long long first_bad = -1;
  MonotonicityCounterexample bad;

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed ^ 0x5bd1e995u, static_cast<std::uint64_t>(t)));
    BallotProfile profile(n);
    for (int i = 0; i < n; ++i)
      profile[i] = Ballot::from_mask(static_cast<std::uint32_t>(rng.below(1ull << m)));
    int voter = rng.below_int(n);
    if (profile[voter].size() == m) profile[voter].remove(rng.below_int(m));
    CandidateId c;
    do {
      c = rng.below_int(m);
    } while (profile[voter].contains(c));

    Committee w = detail::run_elect(instance, elect_fn, profile);
    BallotProfile altered = profile;
    altered[voter].add(c);
    Committee w2 = detail::run_elect(instance, elect_fn, altered);

    bool ok;
    if (w2 == w) {
      ok = true;
    } else {
      Committee entered = w2 - w;
      Committee left = w - w2;
      ok = entered == Committee{}.with(c) && left.size() == 1;
    }
    if (!ok) {
#pragma omp critical
      {
        if (first_bad < 0 || t < first_bad) {
          first_bad = t;
          bad = MonotonicityCounterexample{profile, altered, c, voter, w, w2};
        }
      }
    }
  }

  MonotonicityResult result;
  result.trials = trials;
  if (first_bad >= 0) {
    result.passed = false;
    result.counterexample = bad;
  }
  return result;
}

// Exhaustive variants over the whole profile space; feasible for tiny
// instances only and guarded by a capacity check.
template <typename ElectFn>
MonotonicityResult check_relative_rank_monotonicity_exhaustive(
    const ElectionInstance& instance, ElectFn&& elect_fn) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  const std::uint64_t space = 1ull << (static_cast<std::uint64_t>(m) * n);
  if (space > (1u << 10))
    throw capacity_error("exhaustive relative-rank check limited to 2^(m*n) <= 1024 profiles");

  const std::uint32_t ballot_mask = (1u << m) - 1u;
  std::vector<Committee> winners(space);
  std::vector<std::array<int, kMaxCandidates>> counts(space);
  std::vector<BallotProfile> profiles(space);
  for (std::uint64_t p = 0; p < space; ++p) {
    BallotProfile profile(n);
    for (int i = 0; i < n; ++i)
      profile[i] = Ballot::from_mask(static_cast<std::uint32_t>(p >> (m * i)) & ballot_mask);
    detail::count_approvals(profile, m, counts[p].data());
    winners[p] = detail::run_elect(instance, elect_fn, profile);
    profiles[p] = std::move(profile);
  }

  MonotonicityResult result;
  for (std::uint64_t p = 0; p < space; ++p) {
    for (std::uint64_t q = 0; q < space; ++q) {
      for (CandidateId c : winners[p]) {
        bool hypothesis = counts[q][c] >= counts[p][c];
        for (int other = 0; hypothesis && other < m; ++other)
          if (other != c && counts[q][other] > counts[p][other]) hypothesis = false;
        ++result.trials;
        if (hypothesis && !winners[q].contains(c)) {
          result.passed = false;
          result.counterexample = MonotonicityCounterexample{
              profiles[p], profiles[q], c, -1, winners[p], winners[q]};
          return result;
        }
      }
    }
  }
  return result;
}

template <typename ElectFn>
MonotonicityResult check_monotonic_robustness_exhaustive(const ElectionInstance& instance,
                                                         ElectFn&& elect_fn) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  const std::uint64_t space = 1ull << (static_cast<std::uint64_t>(m) * n);
  if (space > (1u << 16))
    throw capacity_error("exhaustive robustness check limited to 2^(m*n) <= 65536 profiles");

  const std::uint32_t ballot_mask = (1u << m) - 1u;
  MonotonicityResult result;
  for (std::uint64_t p = 0; p < space; ++p) {
    BallotProfile profile(n);
    for (int i = 0; i < n; ++i)
      profile[i] = Ballot::from_mask(static_cast<std::uint32_t>(p >> (m * i)) & ballot_mask);
    Committee w = detail::run_elect(instance, elect_fn, profile);
    for (int i = 0; i < n; ++i) {
      for (CandidateId c = 0; c < m; ++c) {
        if (profile[i].contains(c)) continue;
        BallotProfile altered = profile;
        altered[i].add(c);
        Committee w2 = detail::run_elect(instance, elect_fn, altered);
        ++result.trials;
        bool ok = w2 == w ||
                  ((w2 - w) == Committee{}.with(c) && (w - w2).size() == 1);
        if (!ok) {
          result.passed = false;
          result.counterexample =
              MonotonicityCounterexample{profile, altered, c, i, w, w2};
          return result;
        }
      }
    }
  }
  return result;
}

// RuleSpec conveniences.
MonotonicityResult check_relative_rank_monotonicity(const ElectionInstance& instance,
                                                    const RuleSpec& rule, long long trials,
                                                    std::uint64_t seed, bool parallel = true);
MonotonicityResult check_monotonic_robustness(const ElectionInstance& instance,
                                              const RuleSpec& rule, long long trials,
                                              std::uint64_t seed, bool parallel = true);
MonotonicityResult check_relative_rank_monotonicity_exhaustive(const ElectionInstance& instance,
                                                               const RuleSpec& rule);
MonotonicityResult check_monotonic_robustness_exhaustive(const ElectionInstance& instance,
                                                         const RuleSpec& rule);

}  // namespace mwav
