#include "mwav/model.hpp"

#include <algorithm>

namespace mwav {

PriorityOrder::PriorityOrder(std::vector<CandidateId> ranking)
    : ranking_(std::move(ranking)) {
  const int m = static_cast<int>(ranking_.size());
  rank_of_.assign(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    CandidateId c = ranking_[pos];
    if (c < 0 || c >= m)
      throw contract_error("priority order mentions candidate id " + std::to_string(c) +
                           " outside [0, " + std::to_string(m) + ")");
    if (rank_of_[c] != -1)
      throw contract_error("priority order lists candidate id " + std::to_string(c) +
                           " twice");
    rank_of_[c] = pos;
  }
}

int j_star(const std::vector<Rational>& owa) {
  for (int j = static_cast<int>(owa.size()); j >= 1; --j) {
    if (owa[j - 1].sign() < 0)
      throw contract_error("negative committee-position weight");
    if (owa[j - 1].sign() > 0) {
      for (int i = 0; i < j - 1; ++i)
        if (owa[i].sign() < 0) throw contract_error("negative committee-position weight");
      return j;
    }
  }
  throw contract_error("all-zero committee-position weight vector");
}

bool is_full_rank(const std::vector<Rational>& owa) {
  int js = j_star(owa);
  for (int j = 0; j < js; ++j)
    if (owa[j].sign() <= 0) return false;
  return true;
}

ElectionInstance::ElectionInstance(int committee_size, std::vector<VoterProfile> voters,
                                   PriorityOrder priority, std::vector<std::string> names)
    : k_(committee_size), voters_(std::move(voters)), priority_(std::move(priority)),
      names_(std::move(names)) {
  m_ = priority_.size();
  if (m_ < 1 || m_ > kMaxCandidates)
    throw contract_error("candidate count must be in [1, " +
                         std::to_string(kMaxCandidates) + "]");
  if (k_ < 1 || k_ > m_)
    throw contract_error("committee size must satisfy 1 <= k <= m");
  if (voters_.empty()) throw contract_error("instance needs at least one voter");

  if (names_.empty()) {
    for (int c = 0; c < m_; ++c) names_.push_back(std::string(1, static_cast<char>('a' + c)));
  }
  if (static_cast<int>(names_.size()) != m_)
    throw contract_error("expected one name per candidate");
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (names_[a] == names_[b])
        throw contract_error("duplicate candidate name '" + names_[a] + "'");

  pref_rank_.resize(voters_.size());
  for (std::size_t i = 0; i < voters_.size(); ++i) {
    const VoterProfile& v = voters_[i];
    const std::string who = "voter " + std::to_string(i);
    if (static_cast<int>(v.preference.size()) != m_)
      throw contract_error(who + ": preference order must list all candidates");
    std::vector<int>& rank = pref_rank_[i];
    rank.assign(m_, -1);
    for (int pos = 0; pos < m_; ++pos) {
      CandidateId c = v.preference[pos];
      if (c < 0 || c >= m_)
        throw contract_error(who + ": preference mentions unknown candidate id " +
                             std::to_string(c));
      if (rank[c] != -1)
        throw contract_error(who + ": preference lists a candidate twice");
      rank[c] = pos;
    }
    if (static_cast<int>(v.utility.size()) != m_)
      throw contract_error(who + ": expected one utility per candidate");
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b)
        if (v.utility[a] == v.utility[b])
          throw contract_error(who + ": utilities must be pairwise distinct");
    for (int pos = 0; pos + 1 < m_; ++pos)
      if (!(v.utility[v.preference[pos]] > v.utility[v.preference[pos + 1]]))
        throw contract_error(who +
                             ": preference order does not match descending utilities");
    if (static_cast<int>(v.owa.size()) != k_)
      throw contract_error(who + ": weight vector must have length k");
    j_star_.push_back(j_star(v.owa));  // also rejects negative / all-zero vectors
    full_rank_.push_back(mwav::is_full_rank(v.owa));
  }
}

void ElectionInstance::check_committee(Committee w) const {
  if (!w.subset_of(CandidateSet::full(m_)))
    throw contract_error("committee mentions an unknown candidate id");
  if (w.size() != k_)
    throw contract_error("committee must have exactly k = " + std::to_string(k_) +
                         " members, got " + std::to_string(w.size()));
}

Rational ElectionInstance::owa_utility(int voter, Committee committee) const {
  check_committee(committee);
  const VoterProfile& v = voters_[voter];
  Rational total;
  int slot = 0;
  for (CandidateId c : v.preference) {
    if (!committee.contains(c)) continue;
    total += v.owa[slot] * v.utility[c];
    ++slot;
  }
  return total;
}

bool ElectionInstance::all_full_rank() const {
  return std::all_of(full_rank_.begin(), full_rank_.end(), [](bool b) { return b; });
}

CandidateSet ElectionInstance::ideal_set(int voter) const {
  CandidateSet s;
  for (int pos = 0; pos < j_star_[voter]; ++pos)
    s.add(voters_[voter].preference[pos]);
  return s;
}

CandidateSet ElectionInstance::ideal_union() const {
  CandidateSet s;
  for (int i = 0; i < voter_count(); ++i) s = s | ideal_set(i);
  return s;
}

Preference ElectionInstance::prefers(int voter, Committee w, Committee w_other) const {
  Rational a = owa_utility(voter, w);
  Rational b = owa_utility(voter, w_other);
  if (a > b) return Preference::kStrictlyPrefers;
  if (a < b) return Preference::kStrictlyDispreferred;
  return Preference::kIndifferent;
}

ElectionInstance ElectionInstance::with_priority(PriorityOrder priority) const {
  return ElectionInstance(k_, voters_, std::move(priority), names_);
}

CandidateId ElectionInstance::candidate_by_name(const std::string& name) const {
  for (int c = 0; c < m_; ++c)
    if (names_[c] == name) return c;
  throw contract_error("unknown candidate name '" + name + "'");
}

std::string ElectionInstance::set_to_string(CandidateSet s) const {
  std::string out = "{";
  bool first = true;
  for (CandidateId c : s) {
    if (!first) out += ",";
    out += names_[c];
    first = false;
  }
  return out + "}";
}

UtilityTable::UtilityTable(const ElectionInstance& instance) {
  const int m = instance.candidate_count();
  const int k = instance.committee_size();
  const std::uint32_t space = 1u << m;
  values_.resize(instance.voter_count());
  for (int i = 0; i < instance.voter_count(); ++i) {
    values_[i].resize(space);
    for (std::uint32_t mask = 0; mask < space; ++mask) {
      Committee w = Committee::from_mask(mask);
      if (w.size() == k) values_[i][mask] = instance.owa_utility(i, w);
    }
  }
}

}  // namespace mwav
