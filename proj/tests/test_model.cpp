#include <doctest.h>

#include "helpers.hpp"
#include "mwav/rng.hpp"

using namespace mwav;
using namespace mwav::test;

namespace {

// Voter 0: a>b>c>d with Borda utilities 4,3,2,1 and the given weights.
ElectionInstance one_voter(std::vector<Rational> owa) {
  return make_instance(static_cast<int>(owa.size()), {{0, 1, 2, 3}}, {std::move(owa)},
                       {0, 1, 2, 3});
}

ElectionInstance paper_two_seat() {
  // Voter 0 cares only about their favourite; voters 1 and 2 sum their top two.
  return make_instance(2, {{0, 1, 2, 3}, {2, 3, 0, 1}, {2, 3, 0, 1}},
                       {{Rational(1), Rational(0)},
                        {Rational(1), Rational(1)},
                        {Rational(1), Rational(1)}},
                       {1, 0, 2, 3});
}

}  // namespace

TEST_CASE("owa utility follows the weight vector") {
  // Only the top member counts.
  CHECK(one_voter({Rational(1), Rational(0)}).owa_utility(0, ballot_of({0, 1})) ==
        Rational(4));
  // Only the bottom member counts: {c,d}, {b,d}, {a,d} all collapse to u(d).
  ElectionInstance worst = one_voter({Rational(0), Rational(1)});
  CHECK(worst.owa_utility(0, ballot_of({2, 3})) == Rational(1));
  CHECK(worst.owa_utility(0, ballot_of({1, 3})) == Rational(1));
  CHECK(worst.owa_utility(0, ballot_of({0, 3})) == Rational(1));
  // Additive weights sum the members.
  CHECK(one_voter({Rational(1), Rational(1)}).owa_utility(0, ballot_of({0, 1})) ==
        Rational(7));
}

TEST_CASE("owa utility rejects malformed committees") {
  ElectionInstance inst = one_voter({Rational(1), Rational(0)});
  CHECK_THROWS_AS(inst.owa_utility(0, ballot_of({0})), contract_error);
  CHECK_THROWS_AS(inst.owa_utility(0, ballot_of({0, 1, 2})), contract_error);
  CHECK_THROWS_AS(inst.owa_utility(0, ballot_of({0, 5})), contract_error);
}

TEST_CASE("j_star is the largest positive index") {
  CHECK(j_star({Rational(1), Rational(0), Rational(0)}) == 1);
  CHECK(j_star({Rational(1), Rational(1), Rational(1)}) == 3);
  CHECK(j_star({Rational(1), Rational(0), Rational(2)}) == 3);
  CHECK_THROWS_AS(j_star({Rational(0), Rational(0)}), contract_error);
  CHECK_THROWS_AS(j_star({Rational(-1), Rational(1)}), contract_error);
}

TEST_CASE("full-rank requires positive weights up to j_star") {
  CHECK(is_full_rank({Rational(1), Rational(1)}));
  CHECK_FALSE(is_full_rank({Rational(0), Rational(1)}));
  CHECK(is_full_rank({Rational(1), Rational(0)}));
}

TEST_CASE("j_star and full-rank agree with direct scans over small vectors") {
  const Rational values[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (int len = 1; len <= 6; ++len) {
    int combos = 1;
    for (int i = 0; i < len; ++i) combos *= 4;
    for (int code = 0; code < combos; ++code) {
      std::vector<Rational> owa;
      int rest = code;
      for (int i = 0; i < len; ++i) {
        owa.push_back(values[rest % 4]);
        rest /= 4;
      }
      int direct = 0;
      for (int j = 0; j < len; ++j)
        if (owa[j].sign() > 0) direct = j + 1;
      if (direct == 0) {
        CHECK_THROWS_AS(j_star(owa), contract_error);
        continue;
      }
      CHECK(j_star(owa) == direct);
      bool direct_full = true;
      for (int j = 0; j < direct; ++j)
        if (owa[j].sign() <= 0) direct_full = false;
      CHECK(is_full_rank(owa) == direct_full);
    }
  }
}

TEST_CASE("ideal sets collect the top j_star candidates") {
  ElectionInstance inst = paper_two_seat();
  CHECK(inst.ideal_set(0) == ballot_of({0}));
  CHECK(inst.ideal_set(1) == ballot_of({2, 3}));
  CHECK(inst.ideal_union() == ballot_of({0, 2, 3}));

  ElectionInstance everything =
      make_instance(3, {{2, 0, 1}}, {{Rational(1), Rational(1), Rational(1)}}, {0, 1, 2});
  CHECK(everything.ideal_set(0) == CandidateSet::full(3));
  CHECK(everything.ideal_union() == CandidateSet::full(3));

  ElectionInstance same = make_instance(
      2, {{1, 0, 2}, {1, 0, 2}}, {{Rational(1), Rational(2)}, {Rational(2), Rational(1)}},
      {0, 1, 2});
  CHECK(same.ideal_union() == same.ideal_set(0));
}

TEST_CASE("prefers compares committee utilities") {
  ElectionInstance inst = paper_two_seat();
  // Voter 1's ideal set {c,d} elected vs not elected.
  CHECK(inst.prefers(1, ballot_of({2, 3}), ballot_of({0, 1})) ==
        Preference::kStrictlyPrefers);
  CHECK(inst.prefers(1, ballot_of({2, 3}), ballot_of({2, 3})) == Preference::kIndifferent);

  ElectionInstance worst = one_voter({Rational(0), Rational(1)});
  CHECK(worst.prefers(0, ballot_of({0, 3}), ballot_of({2, 3})) == Preference::kIndifferent);
  CHECK(worst.prefers(0, ballot_of({2, 3}), ballot_of({0, 1})) ==
        Preference::kStrictlyDispreferred);
}

TEST_CASE("swapping in a more-preferred candidate never lowers utility") {
  Rng rng(20240901);
  for (int trial = 0; trial < 400; ++trial) {
    GeneratorConfig config;
    config.m = 3 + rng.below_int(3);
    config.n = 1;
    config.k = 1 + rng.below_int(config.m);
    config.owa = OwaScheme::kRandomAny;
    config.utilities = UtilityScheme::kRandomRational;
    ElectionInstance inst = generate_instance(config, rng.next());

    std::vector<CandidateId> ids(config.m);
    for (int c = 0; c < config.m; ++c) ids[c] = c;
    rng.shuffle(ids);
    Committee w;
    for (int j = 0; j < config.k; ++j) w.add(ids[j]);
    if (w == CandidateSet::full(config.m)) continue;

    CandidateId inside = ids[rng.below_int(config.k)];
    CandidateId outside = ids[config.k + rng.below_int(config.m - config.k)];
    if (inst.preference_rank(0, outside) > inst.preference_rank(0, inside))
      std::swap(inside, outside);  // now outside is the preferred one
    if (!w.contains(inside)) continue;
    Committee swapped = w.without(inside).with(outside);
    CHECK(inst.owa_utility(0, swapped) >= inst.owa_utility(0, w));
  }
}

TEST_CASE("committees containing the ideal set strictly beat ones that do not") {
  Rng rng(77001);
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 200; ++trial) {
    GeneratorConfig config;
    config.m = 3 + rng.below_int(3);
    config.n = 1;
    config.k = 1 + rng.below_int(config.m);
    config.owa = OwaScheme::kRandomAny;
    ElectionInstance inst = generate_instance(config, rng.next());
    CandidateSet ideal = inst.ideal_set(0);
    if (ideal.size() > config.k) continue;

    std::vector<CandidateId> ids(config.m);
    for (int c = 0; c < config.m; ++c) ids[c] = c;

    // W: ideal plus arbitrary fill; W2: any committee missing part of the ideal.
    rng.shuffle(ids);
    Committee w = ideal;
    for (CandidateId c : ids)
      if (w.size() < config.k) w.add(c);
    rng.shuffle(ids);
    Committee w2;
    for (CandidateId c : ids)
      if (w2.size() < config.k) w2.add(c);
    if (ideal.subset_of(w2)) continue;

    CHECK(inst.owa_utility(0, w) > inst.owa_utility(0, w2));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("full-rank swaps toward the ideal set are strict") {
  Rng rng(5150);
  int strict_checked = 0, weak_checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    GeneratorConfig config;
    config.m = 4;
    config.n = 1;
    config.k = 2;
    config.owa = trial % 2 == 0 ? OwaScheme::kRandomFullRank : OwaScheme::kWorst;
    ElectionInstance inst = generate_instance(config, rng.next());
    CandidateSet ideal = inst.ideal_set(0);

    // Find w2 missing some ideal candidate, and swap one in for a worse member.
    CandidateId target = -1;
    for (CandidateId c : ideal) target = c;
    Committee w2;
    for (CandidateId c : inst.voter(0).preference)
      if (c != target && w2.size() < config.k) w2.add(c);
    CandidateId worst_member = -1;
    for (CandidateId c : w2)
      if (worst_member == -1 ||
          inst.preference_rank(0, c) > inst.preference_rank(0, worst_member))
        worst_member = c;
    if (inst.preference_rank(0, worst_member) < inst.preference_rank(0, target)) continue;
    Committee w = w2.without(worst_member).with(target);

    if (inst.full_rank(0)) {
      CHECK(inst.owa_utility(0, w) > inst.owa_utility(0, w2));
      ++strict_checked;
    } else {
      CHECK(inst.owa_utility(0, w) >= inst.owa_utility(0, w2));
      ++weak_checked;
    }
  }
  CHECK(strict_checked > 100);
  CHECK(weak_checked > 100);
}

TEST_CASE("instance construction validates voter data") {
  std::vector<CandidateId> priority = {0, 1, 2};
  VoterProfile v;
  v.preference = {0, 1, 2};
  v.utility = {Rational(3), Rational(2), Rational(1)};
  v.owa = {Rational(1)};

  CHECK_NOTHROW(ElectionInstance(1, {v}, PriorityOrder(priority)));

  VoterProfile dup = v;
  dup.utility = {Rational(2), Rational(2), Rational(1)};
  CHECK_THROWS_AS(ElectionInstance(1, {dup}, PriorityOrder(priority)), contract_error);

  VoterProfile mismatch = v;
  mismatch.utility = {Rational(1), Rational(2), Rational(3)};  // ascending along pref
  CHECK_THROWS_AS(ElectionInstance(1, {mismatch}, PriorityOrder(priority)), contract_error);

  VoterProfile zero = v;
  zero.owa = {Rational(0)};
  CHECK_THROWS_AS(ElectionInstance(1, {zero}, PriorityOrder(priority)), contract_error);

  CHECK_THROWS_AS(PriorityOrder({0, 0, 2}), contract_error);
  CHECK_THROWS_AS(ElectionInstance(4, {v}, PriorityOrder(priority)), contract_error);
  CHECK_THROWS_AS(ElectionInstance(1, {}, PriorityOrder(priority)), contract_error);
}
