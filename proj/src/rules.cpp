#include "mwav/rules.hpp"

namespace mwav {

RuleSpec RuleSpec::candidate_weighted(std::vector<Rational> weights) {
  for (const Rational& w : weights)
    if (w.sign() <= 0)
      throw contract_error("candidate weights must be strictly positive");
  RuleSpec rule;
  rule.kind = RuleKind::kCandidateWeighted;
  rule.weights = std::move(weights);
  return rule;
}

ScoreTable approval_scores(const ElectionInstance& instance, const RuleSpec& rule,
                           const BallotProfile& profile) {
  const int m = instance.candidate_count();
  if (static_cast<int>(profile.size()) != instance.voter_count())
    throw contract_error("profile must contain one ballot per voter");
  const CandidateSet all = CandidateSet::full(m);
  for (const Ballot& b : profile)
    if (!b.subset_of(all))
      throw contract_error("ballot approves an unknown candidate id");
  if (rule.kind == RuleKind::kCandidateWeighted &&
      static_cast<int>(rule.weights.size()) != m)
    throw contract_error("weighted rule needs one weight per candidate");

  ScoreTable table;
  table.approvals.assign(m, 0);
  for (const Ballot& b : profile)
    for (CandidateId c : b) ++table.approvals[c];
  table.score.resize(m);
  for (int c = 0; c < m; ++c) {
    table.score[c] = rule.kind == RuleKind::kStandardAv
                         ? Rational(table.approvals[c])
                         : rule.weights[c] * Rational(table.approvals[c]);
  }
  return table;
}

Committee elect_from_approvals(const ElectionInstance& instance, const RuleSpec& rule,
                               const int* approvals) {
  const int k = instance.committee_size();

  // Walk candidates from highest to lowest priority and keep the list sorted
  // by strictly greater score; equal scores then sit in priority order, so
  // the first k entries are the winners.
  std::array<CandidateId, kMaxCandidates> order;
  int len = 0;

  if (rule.kind == RuleKind::kStandardAv) {
    for (CandidateId c : instance.priority().ranking()) {
      int pos = len;
      while (pos > 0 && approvals[c] > approvals[order[pos - 1]]) --pos;
      for (int j = len; j > pos; --j) order[j] = order[j - 1];
      order[pos] = c;
      ++len;
    }
  } else {
    // score(c) = weight(c) * approvals(c)
    const std::vector<Rational>& w = rule.weights;
    auto greater = [&](CandidateId a, CandidateId b) {
      return w[a] * Rational(approvals[a]) > w[b] * Rational(approvals[b]);
    };
    for (CandidateId c : instance.priority().ranking()) {
      int pos = len;
      while (pos > 0 && greater(c, order[pos - 1])) --pos;
      for (int j = len; j > pos; --j) order[j] = order[j - 1];
      order[pos] = c;
      ++len;
    }
  }

  Committee winners;
  for (int j = 0; j < k; ++j) winners.add(order[j]);
  return winners;
}

Committee elect(const ElectionInstance& instance, const RuleSpec& rule,
                const BallotProfile& profile) {
  ScoreTable table = approval_scores(instance, rule, profile);
  return elect_from_approvals(instance, rule, table.approvals.data());
}

MonotonicityResult check_relative_rank_monotonicity(const ElectionInstance& instance,
                                                    const RuleSpec& rule, long long trials,
                                                    std::uint64_t seed, bool parallel) {
  auto fn = [&rule](const ElectionInstance& inst, const BallotProfile& p) {
    return elect(inst, rule, p);
  };
  return check_relative_rank_monotonicity(instance, fn, trials, seed, parallel);
}

MonotonicityResult check_monotonic_robustness(const ElectionInstance& instance,
                                              const RuleSpec& rule, long long trials,
                                              std::uint64_t seed, bool parallel) {
  auto fn = [&rule](const ElectionInstance& inst, const BallotProfile& p) {
    return elect(inst, rule, p);
  };
  return check_monotonic_robustness(instance, fn, trials, seed, parallel);
}

MonotonicityResult check_relative_rank_monotonicity_exhaustive(
    const ElectionInstance& instance, const RuleSpec& rule) {
  auto fn = [&rule](const ElectionInstance& inst, const BallotProfile& p) {
    return elect(inst, rule, p);
  };
  return check_relative_rank_monotonicity_exhaustive(instance, fn);
}

MonotonicityResult check_monotonic_robustness_exhaustive(const ElectionInstance& instance,
                                                         const RuleSpec& rule) {
  auto fn = [&rule](const ElectionInstance& inst, const BallotProfile& p) {
    return elect(inst, rule, p);
  };
  return check_monotonic_robustness_exhaustive(instance, fn);
}

}  // namespace mwav
