#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mwav/errors.hpp"
#include "mwav/rational.hpp"

namespace mwav {

using CandidateId = int;

// Hard upper bound on the candidate count; sets are 32-bit masks and default
// candidate names are single letters.
constexpr int kMaxCandidates = 26;

// A set of candidates as a bitmask over dense candidate ids.
class CandidateSet {
 public:
  class iterator {
   public:
    explicit iterator(std::uint32_t bits) : rest_(bits) {}
    CandidateId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };

  constexpr CandidateSet() = default;
  static constexpr CandidateSet from_mask(std::uint32_t bits) {
    CandidateSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr CandidateSet full(int m) {
    return from_mask(m >= 32 ? ~0u : ((1u << m) - 1u));
  }

  std::uint32_t mask() const { return bits_; }
  bool contains(CandidateId c) const { return (bits_ >> c) & 1u; }
  void add(CandidateId c) { bits_ |= 1u << c; }
  void remove(CandidateId c) { bits_ &= ~(1u << c); }
  CandidateSet with(CandidateId c) const { return from_mask(bits_ | (1u << c)); }
  CandidateSet without(CandidateId c) const { return from_mask(bits_ & ~(1u << c)); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const CandidateSet& o) const { return (bits_ & o.bits_) == bits_; }

  friend CandidateSet operator&(CandidateSet a, CandidateSet b) { return from_mask(a.bits_ & b.bits_); }
  friend CandidateSet operator|(CandidateSet a, CandidateSet b) { return from_mask(a.bits_ | b.bits_); }
  friend CandidateSet operator-(CandidateSet a, CandidateSet b) { return from_mask(a.bits_ & ~b.bits_); }
  friend bool operator==(CandidateSet a, CandidateSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(CandidateSet a, CandidateSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(CandidateSet a, CandidateSet b) { return a.bits_ < b.bits_; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

// A winning committee is just a candidate set of size k; an approval ballot
// is a candidate set of any size.
using Committee = CandidateSet;
using Ballot = CandidateSet;
using BallotProfile = std::vector<Ballot>;

// Deterministic tie-breaking order; position 0 is the highest priority.
class PriorityOrder {
 public:
  PriorityOrder() = default;
  explicit PriorityOrder(std::vector<CandidateId> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  CandidateId at(int position) const { return ranking_[position]; }
  int rank(CandidateId c) const { return rank_of_[c]; }
  const std::vector<CandidateId>& ranking() const { return ranking_; }

  friend bool operator==(const PriorityOrder& a, const PriorityOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<CandidateId> ranking_;
  std::vector<int> rank_of_;
};

struct VoterProfile {
  std::vector<CandidateId> preference;  // most- to least-preferred, all candidates
  std::vector<Rational> utility;        // indexed by candidate id
  std::vector<Rational> owa;            // committee position weights, length k
};

enum class Preference { kStrictlyPrefers, kIndifferent, kStrictlyDispreferred };

// Largest 1-based index with a positive weight. Throws on an all-zero vector.
int j_star(const std::vector<Rational>& owa);
// True iff every weight up to j_star is strictly positive.
bool is_full_rank(const std::vector<Rational>& owa);

// An election instance: candidates, voters with strict preferences, exact
// cardinal utilities and committee position weights, the committee size and
// the tie-breaking order. Immutable after construction; the constructor
// validates every structural invariant (utilities pairwise distinct and
// consistent with the stated preference order, weights nonnegative and not
// all zero, permutations total).
class ElectionInstance {
 public:
  ElectionInstance(int committee_size, std::vector<VoterProfile> voters,
                   PriorityOrder priority, std::vector<std::string> names = {});

  int candidate_count() const { return m_; }
  int voter_count() const { return static_cast<int>(voters_.size()); }
  int committee_size() const { return k_; }
  const VoterProfile& voter(int i) const { return voters_[i]; }
  const std::vector<VoterProfile>& voters() const { return voters_; }
  const PriorityOrder& priority() const { return priority_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(CandidateId c) const { return names_[c]; }

  // 0-based position of candidate c in voter i's preference order.
  int preference_rank(int voter, CandidateId c) const {
    return pref_rank_[voter][c];
  }

  // OWA committee utility: the committee sorted by the voter's preference,
  // dotted with the voter's weight vector. Exact.
  Rational owa_utility(int voter, Committee committee) const;

  int j_star_of(int voter) const { return j_star_[voter]; }
  bool full_rank(int voter) const { return full_rank_[voter]; }
  bool all_full_rank() const;

  // The voter's top j_star candidates over the whole candidate set.
  CandidateSet ideal_set(int voter) const;
  // Union of all voters' ideal sets.
  CandidateSet ideal_union() const;

  Preference prefers(int voter, Committee w, Committee w_other) const;

  // Identical instance with a different tie-breaking order.
  ElectionInstance with_priority(PriorityOrder priority) const;

  CandidateId candidate_by_name(const std::string& name) const;
  std::string set_to_string(CandidateSet s) const;

 private:
  void check_committee(Committee w) const;

  int m_ = 0;
  int k_ = 0;
  std::vector<VoterProfile> voters_;
  PriorityOrder priority_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> pref_rank_;
  std::vector<int> j_star_;
  std::vector<bool> full_rank_;
};

// Per-voter committee utilities for every size-k subset, indexed by set mask.
// Shared read-only by enumeration loops.
class UtilityTable {
 public:
  explicit UtilityTable(const ElectionInstance& instance);
  const Rational& operator()(int voter, Committee committee) const {
    return values_[voter][committee.mask()];
  }

 private:
  std::vector<std::vector<Rational>> values_;
};

}  // namespace mwav
