#include "mwav/strategy.hpp"

#include <algorithm>
#include <array>

namespace mwav {

namespace {

// Approval counts of everyone except the voter.
void base_counts(const ElectionInstance& instance, const BallotProfile& others,
                 int voter_index, int* out) {
  const int m = instance.candidate_count();
  if (static_cast<int>(others.size()) != instance.voter_count())
    throw contract_error("profile must contain one ballot per voter");
  for (int c = 0; c < m; ++c) out[c] = 0;
  const CandidateSet all = CandidateSet::full(m);
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (static_cast<int>(i) == voter_index) continue;
    if (!others[i].subset_of(all))
      throw contract_error("ballot approves an unknown candidate id");
    for (CandidateId c : others[i]) ++out[c];
  }
}

// Ballots are compared by the priority ranks of their members, best rank
// first; used to pick one canonical minimal best response.
bool priority_lex_less(const ElectionInstance& instance, Ballot a, Ballot b) {
  std::array<int, kMaxCandidates> ra{}, rb{};
  int na = 0, nb = 0;
  for (CandidateId c : a) ra[na++] = instance.priority().rank(c);
  for (CandidateId c : b) rb[nb++] = instance.priority().rank(c);
  std::sort(ra.begin(), ra.begin() + na);
  std::sort(rb.begin(), rb.begin() + nb);
  return std::lexicographical_compare(ra.begin(), ra.begin() + na, rb.begin(),
                                      rb.begin() + nb);
}

}  // namespace

BestResponseReport brute_force_best_responses(const ElectionInstance& instance,
                                              const RuleSpec& rule, int voter_index,
                                              const BallotProfile& others,
                                              LengthRestriction restriction,
                                              int brute_force_cap) {
  const int m = instance.candidate_count();
  if (m > brute_force_cap)
    throw capacity_error("ballot-space scan limited to " +
                         std::to_string(brute_force_cap) + " candidates, instance has " +
                         std::to_string(m));
  std::array<int, kMaxCandidates> base{};
  base_counts(instance, others, voter_index, base.data());

  const int limit = restriction.effective_limit(m);
  const std::uint32_t space = 1u << m;

  BestResponseReport report;
  bool have_any = false;
  bool have_valid = false;
  std::array<int, kMaxCandidates> counts{};
  for (std::uint32_t mask = 0; mask < space; ++mask) {
    Ballot ballot = Ballot::from_mask(mask);
    counts = base;
    for (CandidateId c : ballot) ++counts[c];
    Committee w = elect_from_approvals(instance, rule, counts.data());
    Rational u = instance.owa_utility(voter_index, w);

    if (!have_any || u > report.achievable_utility) {
      report.achievable_utility = u;
      have_any = true;
    }
    if (ballot.size() > limit) continue;
    if (!have_valid || u > report.restricted_utility) {
      report.restricted_utility = u;
      report.br_ballots.clear();
      report.br_ballots.push_back(ballot);
      have_valid = true;
    } else if (u == report.restricted_utility) {
      report.br_ballots.push_back(ballot);
    }
  }

  report.mbr_size = m + 1;
  for (const Ballot& b : report.br_ballots)
    report.mbr_size = std::min(report.mbr_size, b.size());
  for (const Ballot& b : report.br_ballots)
    if (b.size() == report.mbr_size) report.mbr_ballots.push_back(b);
  return report;
}

BestResponseSummary best_response_summary(const ElectionInstance& instance,
                                          const RuleSpec& rule,
                                          const UtilityTable& utilities, int voter_index,
                                          const int* base_approvals) {
  const int m = instance.candidate_count();
  const std::uint32_t space = 1u << m;
  BestResponseSummary summary;
  summary.mbr_size = m + 1;
  bool have = false;
  std::array<int, kMaxCandidates> counts{};
  for (std::uint32_t mask = 0; mask < space; ++mask) {
    Ballot ballot = Ballot::from_mask(mask);
    for (int c = 0; c < m; ++c) counts[c] = base_approvals[c];
    for (CandidateId c : ballot) ++counts[c];
    Committee w = elect_from_approvals(instance, rule, counts.data());
    const Rational& u = utilities(voter_index, w);
    if (!have || u > summary.achievable) {
      summary.achievable = u;
      summary.mbr_size = ballot.size();
      have = true;
    } else if (u == summary.achievable && ballot.size() < summary.mbr_size) {
      summary.mbr_size = ballot.size();
    }
  }
  return summary;
}

BestResponseSummary best_response_summary(const ElectionInstance& instance,
                                          const RuleSpec& rule, int voter_index,
                                          const BallotProfile& others,
                                          int brute_force_cap) {
  const int m = instance.candidate_count();
  if (m > brute_force_cap)
    throw capacity_error("ballot-space scan limited to " +
                         std::to_string(brute_force_cap) + " candidates");
  UtilityTable utilities(instance);
  std::array<int, kMaxCandidates> base{};
  base_counts(instance, others, voter_index, base.data());
  return best_response_summary(instance, rule, utilities, voter_index, base.data());
}

std::pair<int, Ballot> minimal_best_response(const ElectionInstance& instance,
                                             const RuleSpec& rule, int voter_index,
                                             const BallotProfile& others,
                                             LengthRestriction restriction,
                                             int brute_force_cap) {
  BestResponseReport report = brute_force_best_responses(
      instance, rule, voter_index, others, restriction, brute_force_cap);
  Ballot canonical = report.mbr_ballots.front();
  for (const Ballot& b : report.mbr_ballots)
    if (priority_lex_less(instance, b, canonical)) canonical = b;
  return {report.mbr_size, canonical};
}

bool is_sincere(const ElectionInstance& instance, int voter_index, Ballot ballot) {
  if (!ballot.subset_of(CandidateSet::full(instance.candidate_count())))
    throw contract_error("ballot approves an unknown candidate id");
  const auto& pref = instance.voter(voter_index).preference;
  for (int pos = 0; pos < ballot.size(); ++pos)
    if (!ballot.contains(pref[pos])) return false;
  return true;
}

SincereBestResponse sincere_best_response(const ElectionInstance& instance,
                                          const RuleSpec& rule, int voter_index,
                                          const BallotProfile& others,
                                          LengthRestriction restriction) {
  const int m = instance.candidate_count();
  const int limit = restriction.effective_limit(m);
  std::array<int, kMaxCandidates> base{};
  base_counts(instance, others, voter_index, base.data());
  const auto& pref = instance.voter(voter_index).preference;

  std::array<int, kMaxCandidates> counts = base;
  SincereBestResponse best;
  Rational unrestricted_best;
  Ballot prefix;
  for (int len = 0; len <= m; ++len) {
    if (len > 0) {
      prefix.add(pref[len - 1]);
      ++counts[pref[len - 1]];
    }
    Committee w = elect_from_approvals(instance, rule, counts.data());
    Rational u = instance.owa_utility(voter_index, w);
    if (len == 0 || u > unrestricted_best) unrestricted_best = u;
    if (len > limit) continue;
    if (len == 0 || u > best.utility) {
      best.utility = u;
      best.ballot = prefix;
    }
  }
  best.attains_unrestricted = best.utility == unrestricted_best;
  return best;
}

Ballot sincere_completion(const ElectionInstance& instance, const RuleSpec& rule,
                          int voter_index, const BallotProfile& others,
                          Ballot best_response) {
  auto fn = [&rule](const ElectionInstance& inst, const BallotProfile& p) {
    return elect(inst, rule, p);
  };
  return sincere_completion_with(instance, fn, voter_index, others, best_response);
}

ConstrainingSearch constraining_witness(const ElectionInstance& instance,
                                        const RuleSpec& rule, int voter_index,
                                        int restriction_limit, WitnessMode mode,
                                        unsigned long long budget) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  if (restriction_limit < 0 || restriction_limit >= m)
    throw precondition_error("witness search needs a limit in [0, m)");
  const LengthRestriction restriction(restriction_limit);

  ConstrainingSearch search;

  if (mode == WitnessMode::kSynthesizePriority) {
    // Rank everything outside the voter's ideal set first (keeping the
    // instance's relative order), then the ideal set in preference order. An
    // empty profile then elects as few ideal candidates as possible, so a
    // too-short ballot cannot recover them all.
    CandidateSet ideal = instance.ideal_set(voter_index);
    std::vector<CandidateId> ranking;
    for (CandidateId c : instance.priority().ranking())
      if (!ideal.contains(c)) ranking.push_back(c);
    for (CandidateId c : instance.voter(voter_index).preference)
      if (ideal.contains(c)) ranking.push_back(c);
    ElectionInstance shuffled = instance.with_priority(PriorityOrder(ranking));

    BallotProfile empty(n);
    BestResponseReport report = brute_force_best_responses(shuffled, rule, voter_index,
                                                           empty, restriction);
    ++search.profiles_tried;
    if (report.restricted_utility < report.achievable_utility) {
      ConstrainingWitness w;
      w.others = empty;
      w.priority = shuffled.priority();
      w.unrestricted_utility = report.achievable_utility;
      w.restricted_utility = report.restricted_utility;
      w.gap = report.achievable_utility - report.restricted_utility;
      w.canonical = true;
      search.witness = w;
      return search;
    }
  }

  // Bounded enumeration of others-profiles under the instance's own order.
  const std::uint64_t ballots = 1ull << m;
  std::uint64_t space = 1;
  bool overflow = false;
  for (int i = 0; i + 1 < n; ++i) {
    if (space > (~0ull) / ballots) {
      overflow = true;
      break;
    }
    space *= ballots;
  }
  const std::uint64_t scan = overflow ? budget : std::min<std::uint64_t>(space, budget);
  search.exhaustive = !overflow && space <= budget;

  UtilityTable utilities(instance);
  std::array<int, kMaxCandidates> base{};
  std::array<int, kMaxCandidates> counts{};
  for (std::uint64_t idx = 0; idx < scan; ++idx) {
    BallotProfile others(n);
    std::uint64_t rest = idx;
    for (int i = 0; i < n; ++i) {
      if (i == voter_index) continue;
      others[i] = Ballot::from_mask(static_cast<std::uint32_t>(rest & (ballots - 1)));
      rest >>= m;
    }
    for (int c = 0; c < m; ++c) base[c] = 0;
    for (int i = 0; i < n; ++i)
      if (i != voter_index)
        for (CandidateId c : others[i]) ++base[c];

    Rational best_all, best_valid;
    bool have = false, have_valid = false;
    for (std::uint64_t mask = 0; mask < ballots; ++mask) {
      Ballot ballot = Ballot::from_mask(static_cast<std::uint32_t>(mask));
      counts = base;
      for (CandidateId c : ballot) ++counts[c];
      Committee w = elect_from_approvals(instance, rule, counts.data());
      const Rational& u = utilities(voter_index, w);
      if (!have || u > best_all) {
        best_all = u;
        have = true;
      }
      if (ballot.size() <= restriction_limit && (!have_valid || u > best_valid)) {
        best_valid = u;
        have_valid = true;
      }
    }
    ++search.profiles_tried;
    if (best_valid < best_all) {
      ConstrainingWitness w;
      w.others = others;
      w.priority = instance.priority();
      w.unrestricted_utility = best_all;
      w.restricted_utility = best_valid;
      w.gap = best_all - best_valid;
      w.canonical = false;
      search.witness = w;
      search.exhaustive = false;
      return search;
    }
  }
  return search;
}

}  // namespace mwav
