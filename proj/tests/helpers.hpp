#pragma once

#include <string>
#include <vector>

#include "mwav/equilibrium.hpp"
#include "mwav/generator.hpp"
#include "mwav/instance_io.hpp"

namespace mwav::test {

inline std::string fixture(const std::string& name) {
  return std::string(MWAV_FIXTURE_DIR) + "/" + name;
}

// Instance with Borda utilities (m, m-1, ..., 1 down each preference order).
inline ElectionInstance make_instance(int k, std::vector<std::vector<CandidateId>> prefs,
                                      std::vector<std::vector<Rational>> owa,
                                      std::vector<CandidateId> priority) {
  const int m = static_cast<int>(priority.size());
  std::vector<VoterProfile> voters;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    VoterProfile v;
    v.preference = prefs[i];
    v.utility.resize(m);
    for (int pos = 0; pos < m; ++pos) v.utility[prefs[i][pos]] = Rational(m - pos);
    v.owa = owa[i];
    voters.push_back(std::move(v));
  }
  return ElectionInstance(k, std::move(voters), PriorityOrder(std::move(priority)));
}

inline Ballot ballot_of(std::initializer_list<CandidateId> ids) {
  Ballot b;
  for (CandidateId c : ids) b.add(c);
  return b;
}

// Independent brute-force oracle: the best utility the voter can reach by any
// ballot (optionally capped in size), straight off elect() and owa_utility().
inline Rational oracle_best_utility(const ElectionInstance& instance, const RuleSpec& rule,
                                    int voter, const BallotProfile& others,
                                    int max_size = -1) {
  const int m = instance.candidate_count();
  Rational best;
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Ballot b = Ballot::from_mask(mask);
    if (max_size >= 0 && b.size() > max_size) continue;
    BallotProfile profile = others;
    profile[voter] = b;
    Rational u = instance.owa_utility(voter, elect(instance, rule, profile));
    if (!have || u > best) {
      best = u;
      have = true;
    }
  }
  return best;
}

// Smallest ballot attaining the oracle optimum.
inline int oracle_mbr_size(const ElectionInstance& instance, const RuleSpec& rule,
                           int voter, const BallotProfile& others) {
  const int m = instance.candidate_count();
  Rational best = oracle_best_utility(instance, rule, voter, others);
  int smallest = m + 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Ballot b = Ballot::from_mask(mask);
    BallotProfile profile = others;
    profile[voter] = b;
    if (instance.owa_utility(voter, elect(instance, rule, profile)) == best)
      smallest = std::min(smallest, b.size());
  }
  return smallest;
}

inline std::vector<std::vector<CandidateId>> all_permutations(int m) {
  std::vector<CandidateId> base(m);
  for (int c = 0; c < m; ++c) base[c] = c;
  std::vector<std::vector<CandidateId>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace mwav::test
