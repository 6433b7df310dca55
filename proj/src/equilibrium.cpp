#include "mwav/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mwav {

namespace {

bool profile_less(const BallotProfile& a, const BallotProfile& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].mask() != b[i].mask()) return a[i].mask() < b[i].mask();
  }
  return false;
}

void sort_result(EnumerationResult& result) {
  std::sort(result.certificates.begin(), result.certificates.end(),
            [](const EquilibriumCertificate& a, const EquilibriumCertificate& b) {
              return profile_less(a.profile, b.profile);
            });
  std::set<std::uint32_t> seen;
  for (const auto& cert : result.certificates) seen.insert(cert.committee.mask());
  result.committees.clear();
  for (std::uint32_t mask : seen)
    result.committees.push_back(Committee::from_mask(mask));
}

// Shared state for the fast verification paths: precomputed committee
// utilities and, per voter, the set of ballot masks that form a preference
// prefix.
struct FastContext {
  const ElectionInstance& instance;
  const RuleSpec& rule;
  UtilityTable utilities;
  std::vector<std::vector<bool>> sincere_mask;

  FastContext(const ElectionInstance& inst, const RuleSpec& r)
      : instance(inst), rule(r), utilities(inst) {
    const int m = inst.candidate_count();
    sincere_mask.assign(inst.voter_count(), std::vector<bool>(1u << m, false));
    for (int i = 0; i < inst.voter_count(); ++i) {
      Ballot prefix;
      sincere_mask[i][prefix.mask()] = true;
      for (CandidateId c : inst.voter(i).preference) {
        prefix.add(c);
        sincere_mask[i][prefix.mask()] = true;
      }
    }
  }

  BestResponseSummary summary_for(int voter, const int* approvals,
                                  Ballot own_ballot) const {
    std::array<int, kMaxCandidates> base{};
    for (int c = 0; c < instance.candidate_count(); ++c) base[c] = approvals[c];
    for (CandidateId c : own_ballot) --base[c];
    return best_response_summary(instance, rule, utilities, voter, base.data());
  }

  // Returns a certificate when every voter passes the kind's test, nullopt
  // otherwise. `summaries` may be null, in which case each voter's
  // best-response summary is recomputed here.
  std::optional<EquilibriumCertificate> verify(const BallotProfile& profile,
                                               EquilibriumKind kind,
                                               const BestResponseSummary* summaries) const {
    const int m = instance.candidate_count();
    const int n = instance.voter_count();
    std::array<int, kMaxCandidates> counts{};
    for (int c = 0; c < m; ++c) counts[c] = 0;
    for (const Ballot& b : profile)
      for (CandidateId c : b) ++counts[c];
    Committee w = elect_from_approvals(instance, rule, counts.data());

    std::array<BestResponseSummary, 32> local;
    for (int i = 0; i < n; ++i) {
      const BestResponseSummary& s =
          summaries ? summaries[i]
                    : (local[i] = summary_for(i, counts.data(), profile[i]));
      const Rational& u = utilities(i, w);
      if (u != s.achievable) return std::nullopt;
      if (kind == EquilibriumKind::kLazy && profile[i].size() != s.mbr_size)
        return std::nullopt;
      if (kind == EquilibriumKind::kSincere && !sincere_mask[i][profile[i].mask()])
        return std::nullopt;
    }

    EquilibriumCertificate cert;
    cert.committee = w;
    cert.profile = profile;
    cert.kind = kind;
    cert.evidence.resize(n);
    for (int i = 0; i < n; ++i) {
      const BestResponseSummary& s = summaries ? summaries[i] : local[i];
      cert.evidence[i] = VoterEvidence{utilities(i, w), s.achievable, profile[i].size(),
                                       s.mbr_size, sincere_mask[i][profile[i].mask()]};
    }
    if (kind == EquilibriumKind::kLazy &&
        !lazy_score_facts_hold(instance, cert.profile, cert.committee))
      throw invariant_error("lazy certificate violates the equilibrium score facts");
    return cert;
  }
};

std::uint64_t checked_profile_space(int m, int n, std::uint64_t cap,
                                    const char* redirect) {
  if (n > 31 || static_cast<std::uint64_t>(m) * n > 62 || (1ull << (m * n)) > cap)
    throw capacity_error(std::string("profile space (2^m)^n exceeds the cap; ") +
                         redirect);
  return 1ull << (m * n);
}

}  // namespace

bool verified(const VerifyResult& r) {
  return std::holds_alternative<EquilibriumCertificate>(r);
}
const EquilibriumCertificate& certificate(const VerifyResult& r) {
  return std::get<EquilibriumCertificate>(r);
}
const DeviationWitness& witness(const VerifyResult& r) {
  return std::get<DeviationWitness>(r);
}

VerifyResult verify_equilibrium(const ElectionInstance& instance, const RuleSpec& rule,
                                const BallotProfile& profile, EquilibriumKind kind) {
  const int n = instance.voter_count();
  Committee w = elect(instance, rule, profile);

  std::vector<VoterEvidence> evidence(n);
  for (int i = 0; i < n; ++i) {
    BestResponseReport report = brute_force_best_responses(instance, rule, i, profile);
    Rational u = instance.owa_utility(i, w);
    auto canonical_mbr = [&]() {
      return minimal_best_response(instance, rule, i, profile).second;
    };
    if (u < report.achievable_utility) {
      DeviationWitness dev;
      dev.voter = i;
      dev.alternate = canonical_mbr();
      dev.old_utility = u;
      dev.new_utility = report.achievable_utility;
      dev.kind = ViolationKind::kBetterBallot;
      return dev;
    }
    if (kind == EquilibriumKind::kLazy && profile[i].size() != report.mbr_size) {
      DeviationWitness dev;
      dev.voter = i;
      dev.alternate = canonical_mbr();
      dev.old_utility = u;
      dev.new_utility = u;
      dev.kind = ViolationKind::kShorterBrExists;
      return dev;
    }
    bool sincere = is_sincere(instance, i, profile[i]);
    if (kind == EquilibriumKind::kSincere && !sincere) {
      SincereBestResponse sbr = sincere_best_response(instance, rule, i, profile);
      if (sbr.utility != report.achievable_utility)
        throw invariant_error("no sincere ballot attains the best-response optimum");
      DeviationWitness dev;
      dev.voter = i;
      dev.alternate = sbr.ballot;
      dev.old_utility = u;
      dev.new_utility = sbr.utility;
      dev.kind = ViolationKind::kSincereBrExistsElsewhere;
      return dev;
    }
    evidence[i] = VoterEvidence{u, report.achievable_utility, profile[i].size(),
                                report.mbr_size, sincere};
  }

  EquilibriumCertificate cert;
  cert.committee = w;
  cert.profile = profile;
  cert.kind = kind;
  cert.evidence = std::move(evidence);
  if (kind == EquilibriumKind::kLazy &&
      !lazy_score_facts_hold(instance, cert.profile, cert.committee))
    throw invariant_error("lazy certificate violates the equilibrium score facts");
  return cert;
}

bool lazy_score_facts_hold(const ElectionInstance& instance, const BallotProfile& profile,
                           Committee committee) {
  ScoreTable table = approval_scores(instance, RuleSpec::standard_av(), profile);
  for (int c = 0; c < instance.candidate_count(); ++c) {
    if (committee.contains(c)) {
      if (table.approvals[c] > 1) return false;
    } else if (table.approvals[c] != 0) {
      return false;
    }
  }
  return true;
}

EnumerationResult enumerate_equilibria(const ElectionInstance& instance,
                                       const RuleSpec& rule, EquilibriumKind kind,
                                       const EnumerationOptions& options) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  if (m > kDefaultBruteForceCap)
    throw capacity_error("profile enumeration limited to " +
                         std::to_string(kDefaultBruteForceCap) + " candidates");
  const std::uint64_t space = checked_profile_space(
      m, n, options.profile_cap, "use enumerate_lazy_pruned for lazy equilibria");
  const std::uint32_t ballot_mask = (1u << m) - 1u;

  FastContext ctx(instance, rule);

  // Per-voter best-response summaries for every others-profile, when the
  // table fits. Filling it is the dominant cost; each entry is independent.
  const std::uint64_t others_space = space >> m;
  const bool use_memo = others_space <= (1ull << 22) / static_cast<unsigned>(n);
  std::vector<std::vector<BestResponseSummary>> memo;
  if (use_memo) {
    memo.assign(n, {});
    for (int i = 0; i < n; ++i) memo[i].resize(others_space);
    for (int i = 0; i < n; ++i) {
      auto& row = memo[i];
#pragma omp parallel for schedule(dynamic, 256) if (options.parallel)
      for (std::int64_t oidx = 0; oidx < static_cast<std::int64_t>(others_space);
           ++oidx) {
        std::array<int, kMaxCandidates> base{};
        std::uint64_t rest = static_cast<std::uint64_t>(oidx);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          std::uint32_t mask = static_cast<std::uint32_t>(rest) & ballot_mask;
          rest >>= m;
          for (CandidateId c : Ballot::from_mask(mask)) ++base[c];
        }
        row[oidx] = best_response_summary(instance, rule, ctx.utilities, i, base.data());
      }
    }
  }

  const int chunk_count =
      static_cast<int>(std::min<std::uint64_t>(space, options.parallel ? 256 : 1));
  const std::uint64_t chunk_size = (space + chunk_count - 1) / chunk_count;
  std::vector<std::vector<EquilibriumCertificate>> found(chunk_count);

#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (int chunk = 0; chunk < chunk_count; ++chunk) {
    BallotProfile profile(n);
    std::vector<BestResponseSummary> summaries(n);
    const std::uint64_t lo = chunk * chunk_size;
    const std::uint64_t hi = std::min(space, lo + chunk_size);
    for (std::uint64_t pidx = lo; pidx < hi; ++pidx) {
      for (int i = 0; i < n; ++i)
        profile[i] = Ballot::from_mask(
            static_cast<std::uint32_t>(pidx >> (m * i)) & ballot_mask);
      const BestResponseSummary* summary_ptr = nullptr;
      if (use_memo) {
        for (int i = 0; i < n; ++i) {
          const std::uint64_t low = pidx & ((1ull << (m * i)) - 1);
          const std::uint64_t high = (pidx >> (m * (i + 1))) << (m * i);
          summaries[i] = memo[i][low | high];
        }
        summary_ptr = summaries.data();
      }
      if (auto cert = ctx.verify(profile, kind, summary_ptr))
        found[chunk].push_back(std::move(*cert));
    }
  }

  EnumerationResult result;
  result.profiles_scanned = space;
  for (auto& chunk : found)
    for (auto& cert : chunk) result.certificates.push_back(std::move(cert));
  sort_result(result);
  return result;
}

EnumerationResult enumerate_equilibria_reference(const ElectionInstance& instance,
                                                 const RuleSpec& rule,
                                                 EquilibriumKind kind,
                                                 std::uint64_t profile_cap) {
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  const std::uint64_t space =
      checked_profile_space(m, n, profile_cap, "reduce the instance");
  const std::uint32_t ballot_mask = (1u << m) - 1u;

  EnumerationResult result;
  result.profiles_scanned = space;
  for (std::uint64_t pidx = 0; pidx < space; ++pidx) {
    BallotProfile profile(n);
    for (int i = 0; i < n; ++i)
      profile[i] =
          Ballot::from_mask(static_cast<std::uint32_t>(pidx >> (m * i)) & ballot_mask);
    VerifyResult r = verify_equilibrium(instance, rule, profile, kind);
    if (verified(r)) result.certificates.push_back(certificate(r));
  }
  sort_result(result);
  return result;
}

EnumerationResult enumerate_lazy_pruned(const ElectionInstance& instance,
                                        const RuleSpec& rule,
                                        const EnumerationOptions& options) {
  if (rule.kind != RuleKind::kStandardAv)
    throw precondition_error("the pruned lazy enumerator requires standard AV");
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  const int k = instance.committee_size();
  if (m > kDefaultBruteForceCap || n > 31)
    throw capacity_error("profile enumeration limited to " +
                         std::to_string(kDefaultBruteForceCap) +
                         " candidates and 31 voters");

  // In a lazy equilibrium every approved candidate has exactly one approval
  // and at most k candidates are approved. Enumerate exactly those profiles:
  // a supported set T (|T| <= k) plus an assignment of each member to one
  // approving voter.
  std::vector<BallotProfile> candidates;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    CandidateSet support = CandidateSet::from_mask(mask);
    const int t = support.size();
    if (t > k) continue;
    std::vector<CandidateId> members;
    for (CandidateId c : support) members.push_back(c);
    std::uint64_t assignments = 1;
    for (int j = 0; j < t; ++j) assignments *= n;
    if (candidates.size() + assignments > options.profile_cap)
      throw capacity_error("pruned profile space exceeds the cap");
    for (std::uint64_t a = 0; a < assignments; ++a) {
      BallotProfile profile(n);
      std::uint64_t rest = a;
      for (int j = 0; j < t; ++j) {
        profile[rest % n].add(members[j]);
        rest /= n;
      }
      candidates.push_back(std::move(profile));
    }
  }

  FastContext ctx(instance, rule);
  const std::int64_t total = static_cast<std::int64_t>(candidates.size());
  std::vector<std::optional<EquilibriumCertificate>> outcome(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) if (options.parallel)
  for (std::int64_t idx = 0; idx < total; ++idx)
    outcome[idx] = ctx.verify(candidates[idx], EquilibriumKind::kLazy, nullptr);

  EnumerationResult result;
  result.profiles_scanned = candidates.size();
  for (auto& cert : outcome)
    if (cert) result.certificates.push_back(std::move(*cert));
  sort_result(result);
  return result;
}

LazyDichotomy classify_lazy_dichotomy(const ElectionInstance& instance,
                                      const EquilibriumCertificate& cert) {
  if (cert.kind != EquilibriumKind::kLazy)
    throw precondition_error("dichotomy classification applies to lazy certificates");
  if (!instance.all_full_rank())
    throw precondition_error(
        "dichotomy classification requires full-rank weight vectors for every "
        "voter; the split does not hold otherwise");
  CandidateSet ideal = instance.ideal_union();
  if (ideal.subset_of(cert.committee)) return LazyDichotomy::kContainsIdeal;
  if (cert.committee.subset_of(ideal) && cert.committee != ideal)
    return LazyDichotomy::kInsideIdeal;
  return LazyDichotomy::kViolation;
}

EquilibriumCertificate construct_containment_pne(const ElectionInstance& instance,
                                                 const RuleSpec& rule) {
  const int k = instance.committee_size();
  const int n = instance.voter_count();
  CandidateSet ideal = instance.ideal_union();
  const int ell = ideal.size();
  if (ell > k)
    throw precondition_error(
        "the ideal union exceeds the committee size; use enumerate_lazy_pruned");

  std::vector<CandidateId> by_priority;
  for (CandidateId c : instance.priority().ranking())
    if (ideal.contains(c)) by_priority.push_back(c);

  // Walk the ideal union from lowest priority upward. Once the remaining
  // prefix fits inside the priority positions left for it, the tie-break
  // elects it with no votes at all; until then each candidate needs exactly
  // one approving voter who counts it in their ideal set.
  BallotProfile profile(n);
  for (int t = ell; t >= 1; --t) {
    CandidateId c = by_priority[t - 1];
    const int sigma_t = instance.priority().rank(c) + 1;  // 1-based
    if (sigma_t <= k - ell + t) break;
    for (int i = 0; i < n; ++i) {
      if (instance.ideal_set(i).contains(c)) {
        profile[i].add(c);
        break;
      }
    }
  }

  VerifyResult r = verify_equilibrium(instance, rule, profile, EquilibriumKind::kLazy);
  if (!verified(r))
    throw invariant_error("containment construction failed to verify");
  return certificate(r);
}

SigmaCheck check_sigma_condition(const ElectionInstance& instance,
                                 const EquilibriumCertificate& cert) {
  if (cert.kind != EquilibriumKind::kLazy)
    throw precondition_error("the sigma condition applies to lazy certificates");
  if (!instance.all_full_rank())
    throw precondition_error("the sigma condition requires full-rank voters");
  CandidateSet ideal = instance.ideal_union();
  Committee w = cert.committee;
  if (!(w.subset_of(ideal) && w != ideal))
    throw precondition_error(
        "the sigma condition applies when the committee sits strictly inside "
        "the ideal union");

  const int k = instance.committee_size();
  CandidateId lowest = -1;
  int lowest_rank = -1;
  for (CandidateId c : w) {
    if (instance.priority().rank(c) > lowest_rank) {
      lowest_rank = instance.priority().rank(c);
      lowest = c;
    }
  }
  SigmaCheck check;
  if (lowest_rank + 1 <= k) {
    check.passed = false;
    check.detail = "lowest-priority winner " + instance.name(lowest) +
                   " sits within the top-k priority positions";
    return check;
  }

  for (int i = 0; i < instance.voter_count(); ++i) {
    // The voter's top j* members of the committee.
    CandidateSet top;
    int taken = 0;
    for (CandidateId c : instance.voter(i).preference) {
      if (!w.contains(c)) continue;
      top.add(c);
      if (++taken == instance.j_star_of(i)) break;
    }
    if (!top.contains(lowest)) continue;
    for (int pos = 0; pos < lowest_rank; ++pos) {
      CandidateId rival = instance.priority().at(pos);
      if (w.contains(rival)) continue;
      if (instance.preference_rank(i, rival) < instance.preference_rank(i, lowest)) {
        check.passed = false;
        check.detail = "voter " + std::to_string(i) + " prefers unelected " +
                       instance.name(rival) + " over the lowest-priority winner " +
                       instance.name(lowest);
        return check;
      }
    }
  }
  return check;
}

std::vector<Committee> k1_characterization(const ElectionInstance& instance,
                                           const RuleSpec& rule) {
  (void)rule;
  if (instance.committee_size() != 1)
    throw precondition_error("the single-winner characterisation requires k = 1");
  const int m = instance.candidate_count();
  const int n = instance.voter_count();

  std::vector<Committee> predicted;
  for (CandidateId c = 0; c < m; ++c) {
    bool unanimous_top = true;
    bool someones_top = false;
    for (int i = 0; i < n; ++i) {
      if (instance.voter(i).preference[0] == c)
        someones_top = true;
      else
        unanimous_top = false;
    }
    bool clause2 = instance.priority().rank(c) > 0 && someones_top;
    for (int pos = 0; clause2 && pos < instance.priority().rank(c); ++pos) {
      CandidateId d = instance.priority().at(pos);
      for (int i = 0; i < n; ++i) {
        if (instance.preference_rank(i, c) > instance.preference_rank(i, d)) {
          clause2 = false;
          break;
        }
      }
    }
    if (unanimous_top || clause2) predicted.push_back(Committee{}.with(c));
  }
  std::sort(predicted.begin(), predicted.end(),
            [](Committee a, Committee b) { return a.mask() < b.mask(); });
  return predicted;
}

EquilibriumCertificate construct_sincere_pne(const ElectionInstance& instance,
                                             const RuleSpec& rule,
                                             bool require_nonempty) {
  if (rule.kind != RuleKind::kStandardAv)
    throw precondition_error("the sincere construction requires standard AV");
  const int m = instance.candidate_count();
  const int n = instance.voter_count();
  const int k = instance.committee_size();
  if (n <= m)
    throw precondition_error(
        "the sincere construction needs more voters than candidates");

  // k pigeonhole rounds: with fewer remaining candidates than voters, some
  // candidate is the current first preference of at least two voters.
  CandidateSet chosen;
  for (int round = 0; round < k; ++round) {
    std::array<int, kMaxCandidates> heads{};
    for (int i = 0; i < n; ++i) {
      for (CandidateId c : instance.voter(i).preference) {
        if (!chosen.contains(c)) {
          ++heads[c];
          break;
        }
      }
    }
    CandidateId pick = -1;
    for (CandidateId c : instance.priority().ranking()) {
      if (chosen.contains(c) || heads[c] < 2) continue;
      if (pick == -1 || heads[c] > heads[pick]) pick = c;
    }
    if (pick == -1)
      throw invariant_error("pigeonhole round found no twice-preferred candidate");
    chosen.add(pick);
  }

  // Every voter approves their longest preference prefix inside the winner
  // set; each chosen candidate then keeps the two or more supporters whose
  // preference reached it during its round.
  BallotProfile profile(n);
  for (int i = 0; i < n; ++i) {
    Ballot prefix;
    for (CandidateId c : instance.voter(i).preference) {
      if (!chosen.contains(c)) break;
      prefix.add(c);
    }
    if (prefix.empty() && require_nonempty) prefix = CandidateSet::full(m);
    profile[i] = prefix;
  }

  if (elect(instance, rule, profile) != chosen)
    throw invariant_error("sincere construction elected an unexpected committee");
  VerifyResult r = verify_equilibrium(instance, rule, profile, EquilibriumKind::kSincere);
  if (!verified(r)) throw invariant_error("sincere construction failed to verify");
  return certificate(r);
}

Rational welfare(const ElectionInstance& instance, Committee committee) {
  Rational total;
  for (int i = 0; i < instance.voter_count(); ++i)
    total += instance.owa_utility(i, committee);
  return total;
}

Rational welfare(const ElectionInstance& instance, const EquilibriumCertificate& cert) {
  return welfare(instance, cert.committee);
}

}  // namespace mwav
