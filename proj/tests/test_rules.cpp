#include <doctest.h>

#include "helpers.hpp"
#include "mwav/rng.hpp"

using namespace mwav;
using namespace mwav::test;

namespace {

ElectionInstance like_minded() {
  // Three voters, identical preferences b > a > c, single winner.
  return make_instance(1, {{1, 0, 2}, {1, 0, 2}, {1, 0, 2}},
                       {{Rational(1)}, {Rational(1)}, {Rational(1)}}, {0, 1, 2});
}

// Elects the k candidates with the LOWEST scores; violates relative rank
// monotonicity. Still a function of the score table.
Committee elect_lowest(const ElectionInstance& instance, const BallotProfile& profile) {
  ScoreTable table = approval_scores(instance, RuleSpec::standard_av(), profile);
  std::vector<CandidateId> order = instance.priority().ranking();
  std::stable_sort(order.begin(), order.end(), [&](CandidateId a, CandidateId b) {
    return table.approvals[a] < table.approvals[b];
  });
  Committee w;
  for (int j = 0; j < instance.committee_size(); ++j) w.add(order[j]);
  return w;
}

// On reinforcement, swaps out everything; violates monotonic robustness for
// k >= 2 while still reacting to scores.
Committee elect_scrambled(const ElectionInstance& instance, const BallotProfile& profile) {
  ScoreTable table = approval_scores(instance, RuleSpec::standard_av(), profile);
  int total = 0;
  for (int c = 0; c < instance.candidate_count(); ++c) total += table.approvals[c];
  std::vector<CandidateId> order = instance.priority().ranking();
  std::rotate(order.begin(), order.begin() + total % order.size(), order.end());
  Committee w;
  for (int j = 0; j < instance.committee_size(); ++j) w.add(order[j]);
  return w;
}

}  // namespace

TEST_CASE("approval scores count ballots") {
  ElectionInstance inst = like_minded();
  RuleSpec av = RuleSpec::standard_av();
  BallotProfile all_c = {ballot_of({2}), ballot_of({2}), ballot_of({2})};
  ScoreTable table = approval_scores(inst, av, all_c);
  CHECK(table.approvals == std::vector<int>{0, 0, 3});
  CHECK(table.score[2] == Rational(3));

  BallotProfile empty(3);
  table = approval_scores(inst, av, empty);
  CHECK(table.approvals == std::vector<int>{0, 0, 0});
  CHECK(table.score[0] == Rational(0));

  RuleSpec weighted =
      RuleSpec::candidate_weighted({Rational(1), Rational(1), Rational(2)});
  table = approval_scores(inst, weighted, all_c);
  CHECK(table.score[2] == Rational(6));

  BallotProfile bogus = {ballot_of({5}), Ballot{}, Ballot{}};
  CHECK_THROWS_AS(approval_scores(inst, av, bogus), contract_error);
  CHECK_THROWS_AS(approval_scores(inst, av, BallotProfile(2)), contract_error);
}

TEST_CASE("elect picks the top-k by score then priority") {
  RuleSpec av = RuleSpec::standard_av();
  ElectionInstance inst = like_minded();
  CHECK(elect(inst, av, {ballot_of({2}), ballot_of({2}), ballot_of({2})}) ==
        ballot_of({2}));

  // All-zero scores resolve purely by priority even for k = 2.
  ElectionInstance two_seat = make_instance(
      2, {{0, 1, 2, 3}, {2, 3, 0, 1}, {2, 3, 0, 1}},
      {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
      {1, 0, 2, 3});
  CHECK(elect(two_seat, av, BallotProfile(3)) == ballot_of({0, 1}));
  CHECK(elect(two_seat, av, {ballot_of({0, 1}), Ballot{}, Ballot{}}) == ballot_of({0, 1}));
}

TEST_CASE("elect returns exactly k candidates and ignores voter order") {
  Rng rng(424242);
  RuleSpec av = RuleSpec::standard_av();
  for (int trial = 0; trial < 300; ++trial) {
    GeneratorConfig config;
    config.m = 2 + rng.below_int(5);
    config.n = 1 + rng.below_int(5);
    config.k = 1 + rng.below_int(config.m);
    config.owa = OwaScheme::kRandomAny;
    ElectionInstance inst = generate_instance(config, rng.next());
    BallotProfile profile(config.n);
    for (auto& b : profile)
      b = Ballot::from_mask(static_cast<std::uint32_t>(rng.below(1u << config.m)));
    Committee w = elect(inst, av, profile);
    CHECK(w.size() == config.k);
    CHECK(w == elect(inst, av, profile));  // deterministic

    BallotProfile shuffled = profile;
    rng.shuffle(shuffled);
    CHECK(elect(inst, av, shuffled) == w);  // anonymous
  }
}

TEST_CASE("monotonicity checkers pass for both built-in rules") {
  Rng rng(90210);
  for (int trial = 0; trial < 20; ++trial) {
    GeneratorConfig config;
    config.m = 2 + rng.below_int(5);
    config.n = 1 + rng.below_int(5);
    config.k = 1 + rng.below_int(config.m);
    config.owa = OwaScheme::kRandomAny;
    ElectionInstance inst = generate_instance(config, rng.next());

    std::vector<Rational> weights;
    for (int c = 0; c < config.m; ++c)
      weights.push_back(Rational(1 + rng.below_int(4), 1 + rng.below_int(2)));
    for (const RuleSpec& rule :
         {RuleSpec::standard_av(), RuleSpec::candidate_weighted(weights)}) {
      CHECK(check_relative_rank_monotonicity(inst, rule, 250, rng.next()).passed);
      CHECK(check_monotonic_robustness(inst, rule, 250, rng.next()).passed);
    }
  }
}

TEST_CASE("exhaustive checkers cover tiny instances") {
  ElectionInstance inst = like_minded();
  RuleSpec av = RuleSpec::standard_av();
  MonotonicityResult rrm = check_relative_rank_monotonicity_exhaustive(inst, av);
  CHECK(rrm.passed);
  CHECK(rrm.trials > 0);
  CHECK(check_monotonic_robustness_exhaustive(inst, av).passed);

  GeneratorConfig big;
  big.m = 4;
  big.n = 4;
  big.k = 2;
  ElectionInstance too_big = generate_instance(big, 1);
  CHECK_THROWS_AS(check_relative_rank_monotonicity_exhaustive(too_big, av),
                  capacity_error);
}

TEST_CASE("a lowest-score rule fails relative rank monotonicity with a witness") {
  // One voter, two candidates: approving a candidate makes it lose.
  ElectionInstance inst =
      make_instance(1, {{0, 1}}, {{Rational(1)}}, {0, 1});
  MonotonicityResult result =
      check_relative_rank_monotonicity(inst, elect_lowest, 500, 7);
  CHECK_FALSE(result.passed);
  REQUIRE(result.counterexample.has_value());
  // Replay the counterexample against the faulty rule.
  const MonotonicityCounterexample& bad = *result.counterexample;
  CHECK(elect_lowest(inst, bad.profile) == bad.before);
  CHECK(elect_lowest(inst, bad.altered_profile) == bad.after);
  CHECK(bad.before.contains(bad.candidate));
  CHECK_FALSE(bad.after.contains(bad.candidate));

  MonotonicityResult exhaustive =
      check_relative_rank_monotonicity_exhaustive(inst, elect_lowest);
  CHECK_FALSE(exhaustive.passed);
}

TEST_CASE("a scrambling rule fails monotonic robustness") {
  ElectionInstance inst = make_instance(
      2, {{0, 1, 2, 3}}, {{Rational(1), Rational(1)}}, {0, 1, 2, 3});
  MonotonicityResult result = check_monotonic_robustness(inst, elect_scrambled, 500, 11);
  CHECK_FALSE(result.passed);
  REQUIRE(result.counterexample.has_value());
  CHECK_FALSE(check_monotonic_robustness_exhaustive(inst, elect_scrambled).passed);

  // The standard rules are fine on the same instance.
  CHECK(check_monotonic_robustness_exhaustive(inst, RuleSpec::standard_av()).passed);
}

TEST_CASE("weighted rules require positive weights") {
  CHECK_THROWS_AS(RuleSpec::candidate_weighted({Rational(1), Rational(0)}),
                  contract_error);
  CHECK_THROWS_AS(RuleSpec::candidate_weighted({Rational(1), Rational(-2)}),
                  contract_error);
}
