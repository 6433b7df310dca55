// Command-line front end: election evaluation, best-response analysis,
// equilibrium search and construction, property checks, batch experiments.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwav/equilibrium.hpp"
#include "mwav/experiment.hpp"
#include "mwav/instance_io.hpp"
#include "mwav/rng.hpp"

using namespace mwav;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;  // property violated / no equilibrium found
constexpr int kExitUsage = 2;     // usage or parse error

struct GlobalOptions {
  std::string instance_path;
  std::string rule_name = "av";
  std::string weights_text;
  int restriction = -1;  // -1 = unrestricted
  std::uint64_t seed = 1;
  std::string format = "text";
};

bool machine(const GlobalOptions& opts) { return opts.format == "machine"; }

ElectionInstance require_instance(const GlobalOptions& opts) {
  if (opts.instance_path.empty())
    throw config_error("this command needs --instance PATH");
  return load_instance(opts.instance_path);
}

RuleSpec make_rule(const GlobalOptions& opts, const ElectionInstance& instance) {
  if (opts.rule_name == "av") return RuleSpec::standard_av();
  if (opts.rule_name != "weighted")
    throw config_error("unknown rule '" + opts.rule_name + "'");
  if (opts.weights_text.empty())
    throw config_error("--rule weighted needs --weights p[/q],p[/q],...");
  std::vector<Rational> weights;
  std::string current;
  std::istringstream in(opts.weights_text);
  while (std::getline(in, current, ','))
    weights.push_back(Rational::parse(current));
  if (static_cast<int>(weights.size()) != instance.candidate_count())
    throw config_error("expected one weight per candidate");
  return RuleSpec::candidate_weighted(std::move(weights));
}

LengthRestriction make_restriction(const GlobalOptions& opts) {
  return opts.restriction < 0 ? LengthRestriction::unrestricted()
                              : LengthRestriction(opts.restriction);
}

const char* kind_name(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPlain: return "plain";
    case EquilibriumKind::kLazy: return "lazy";
    case EquilibriumKind::kSincere: return "sincere";
  }
  return "?";
}

EquilibriumKind kind_from_name(const std::string& name) {
  if (name == "plain") return EquilibriumKind::kPlain;
  if (name == "lazy") return EquilibriumKind::kLazy;
  if (name == "sincere") return EquilibriumKind::kSincere;
  throw config_error("unknown equilibrium kind '" + name + "'");
}

json witness_json(const ElectionInstance& instance, const DeviationWitness& dev) {
  const char* kind = dev.kind == ViolationKind::kBetterBallot ? "better-ballot"
                     : dev.kind == ViolationKind::kShorterBrExists
                         ? "shorter-br-exists"
                         : "sincere-br-exists-elsewhere";
  return {{"voter", dev.voter},
          {"alternate", instance.set_to_string(dev.alternate)},
          {"old_utility", dev.old_utility.str()},
          {"new_utility", dev.new_utility.str()},
          {"violation", kind}};
}

std::string witness_text(const ElectionInstance& instance, const DeviationWitness& dev) {
  std::ostringstream out;
  out << "voter " << dev.voter;
  switch (dev.kind) {
    case ViolationKind::kBetterBallot:
      out << " improves from " << dev.old_utility << " to " << dev.new_utility
          << " via " << instance.set_to_string(dev.alternate);
      break;
    case ViolationKind::kShorterBrExists:
      out << " has the shorter best response " << instance.set_to_string(dev.alternate);
      break;
    case ViolationKind::kSincereBrExistsElsewhere:
      out << " has the sincere best response " << instance.set_to_string(dev.alternate);
      break;
  }
  return out.str();
}

void emit(const GlobalOptions& opts, const json& machine_doc, const std::string& text) {
  if (machine(opts)) {
    json doc = machine_doc;
    doc["schema"] = "mwav-cli-v1";
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_gen(const GlobalOptions& opts, const GeneratorConfig& config,
            const std::string& out_path) {
  ElectionInstance instance = generate_instance(config, opts.seed);
  std::string text = serialize_instance(instance);
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    save_instance(instance, out_path);
  return kExitOk;
}

int cmd_elect(const GlobalOptions& opts, const std::string& ballots) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  BallotProfile profile = parse_profile(instance, ballots);
  ScoreTable table = approval_scores(instance, rule, profile);
  Committee w = elect(instance, rule, profile);

  json scores = json::object();
  for (int c = 0; c < instance.candidate_count(); ++c)
    scores[instance.name(c)] = {{"approvals", table.approvals[c]},
                                {"score", table.score[c].str()}};
  std::ostringstream text;
  text << "committee " << instance.set_to_string(w) << "\n";
  for (int c = 0; c < instance.candidate_count(); ++c)
    text << "  " << instance.name(c) << ": " << table.approvals[c] << " approvals\n";
  emit(opts, {{"command", "elect"}, {"committee", instance.set_to_string(w)},
              {"scores", scores}},
       text.str());
  return kExitOk;
}

int cmd_best_response(const GlobalOptions& opts, int voter, const std::string& ballots,
                      bool mbr_only, bool sincere) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  BallotProfile others = parse_profile(instance, ballots);
  if (voter < 0 || voter >= instance.voter_count())
    throw config_error("--voter out of range");
  LengthRestriction restriction = make_restriction(opts);

  if (sincere) {
    SincereBestResponse sbr =
        sincere_best_response(instance, rule, voter, others, restriction);
    std::ostringstream text;
    text << "sincere best response " << instance.set_to_string(sbr.ballot)
         << " utility " << sbr.utility
         << (sbr.attains_unrestricted ? "" : " (below the unrestricted optimum)") << "\n";
    emit(opts,
         {{"command", "sincere-br"},
          {"ballot", instance.set_to_string(sbr.ballot)},
          {"utility", sbr.utility.str()},
          {"attains_unrestricted", sbr.attains_unrestricted}},
         text.str());
    return kExitOk;
  }

  if (mbr_only) {
    auto [size, ballot] = minimal_best_response(instance, rule, voter, others, restriction);
    std::ostringstream text;
    text << "minimal best response size " << size << ": " << instance.set_to_string(ballot)
         << "\n";
    emit(opts,
         {{"command", "mbr"}, {"size", size}, {"ballot", instance.set_to_string(ballot)}},
         text.str());
    return kExitOk;
  }

  BestResponseReport report =
      brute_force_best_responses(instance, rule, voter, others, restriction);
  json ballots_json = json::array();
  for (const Ballot& b : report.br_ballots)
    ballots_json.push_back(instance.set_to_string(b));
  json mbr_json = json::array();
  for (const Ballot& b : report.mbr_ballots)
    mbr_json.push_back(instance.set_to_string(b));
  std::ostringstream text;
  text << "achievable utility " << report.achievable_utility << "\n";
  if (restriction.is_restricted(instance.candidate_count()))
    text << "restricted optimum " << report.restricted_utility << "\n";
  text << report.br_ballots.size() << " best responses, minimal size " << report.mbr_size
       << ":";
  for (const Ballot& b : report.mbr_ballots) text << " " << instance.set_to_string(b);
  text << "\n";
  emit(opts,
       {{"command", "best-response"},
        {"achievable_utility", report.achievable_utility.str()},
        {"restricted_utility", report.restricted_utility.str()},
        {"br_ballots", ballots_json},
        {"mbr_size", report.mbr_size},
        {"mbr_ballots", mbr_json}},
       text.str());
  return kExitOk;
}

int cmd_constraining(const GlobalOptions& opts, int voter, const std::string& mode_name,
                     unsigned long long budget) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  if (opts.restriction < 0)
    throw config_error("constraining needs --restriction R with R < m");
  WitnessMode mode = mode_name == "fixed" ? WitnessMode::kFixedPriority
                                          : WitnessMode::kSynthesizePriority;
  ConstrainingSearch search =
      constraining_witness(instance, rule, voter, opts.restriction, mode, budget);
  if (search.witness) {
    const ConstrainingWitness& w = *search.witness;
    std::ostringstream text;
    text << "constraining witness (" << (w.canonical ? "canonical" : "enumerated")
         << "): others " << profile_to_string(instance, w.others) << ", priority";
    for (CandidateId c : w.priority.ranking()) text << " " << instance.name(c);
    text << ", utility gap " << w.gap << " (" << w.restricted_utility << " vs "
         << w.unrestricted_utility << ")\n";
    json priority = json::array();
    for (CandidateId c : w.priority.ranking()) priority.push_back(instance.name(c));
    emit(opts,
         {{"command", "constraining"},
          {"found", true},
          {"canonical", w.canonical},
          {"others", profile_to_string(instance, w.others)},
          {"priority", priority},
          {"unrestricted_utility", w.unrestricted_utility.str()},
          {"restricted_utility", w.restricted_utility.str()},
          {"gap", w.gap.str()}},
         text.str());
    return kExitOk;
  }
  std::ostringstream text;
  text << "no constraining witness"
       << (search.exhaustive ? " (exhaustive)" : " (budget exhausted)") << " after "
       << search.profiles_tried << " profiles\n";
  emit(opts,
       {{"command", "constraining"},
        {"found", false},
        {"exhaustive", search.exhaustive},
        {"profiles_tried", search.profiles_tried}},
       text.str());
  return kExitViolated;
}

int cmd_find_pne(const GlobalOptions& opts, const std::string& kind_text, bool pruned,
                 std::uint64_t cap) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  EquilibriumKind kind = kind_from_name(kind_text);
  EnumerationOptions options;
  options.profile_cap = cap;
  EnumerationResult result;
  if (pruned) {
    if (kind != EquilibriumKind::kLazy)
      throw config_error("--pruned applies to --kind lazy only");
    result = enumerate_lazy_pruned(instance, rule, options);
  } else {
    result = enumerate_equilibria(instance, rule, kind, options);
  }

  json committees = json::array();
  for (Committee w : result.committees) committees.push_back(instance.set_to_string(w));
  json certs = json::array();
  for (const auto& cert : result.certificates) {
    certs.push_back({{"committee", instance.set_to_string(cert.committee)},
                     {"profile", profile_to_string(instance, cert.profile)}});
  }

  std::ostringstream text;
  if (result.committees.empty()) {
    text << "no " << kind_text << "-PNE (" << result.profiles_scanned
         << " profiles scanned)\n";
  } else {
    text << result.committees.size() << " " << kind_text << "-PNE committee"
         << (result.committees.size() == 1 ? "" : "s") << ":";
    for (Committee w : result.committees) text << " " << instance.set_to_string(w);
    text << "\nsupported by " << result.certificates.size() << " profile"
         << (result.certificates.size() == 1 ? "" : "s") << "\n";
  }
  emit(opts,
       {{"command", "find-pne"},
        {"kind", kind_text},
        {"pruned", pruned},
        {"committees", committees},
        {"certificates", certs},
        {"profiles_scanned", result.profiles_scanned}},
       text.str());
  return result.committees.empty() ? kExitViolated : kExitOk;
}

int cmd_construct(const GlobalOptions& opts, const std::string& kind_text,
                  bool nonempty) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  EquilibriumCertificate cert;
  if (kind_text == "containment") {
    cert = construct_containment_pne(instance, rule);
  } else if (kind_text == "sincere") {
    cert = construct_sincere_pne(instance, rule, nonempty);
  } else {
    throw config_error("--kind must be containment or sincere");
  }
  std::ostringstream text;
  text << kind_name(cert.kind) << "-PNE committee " << instance.set_to_string(cert.committee)
       << " supported by " << profile_to_string(instance, cert.profile) << "\n";
  emit(opts,
       {{"command", "construct-pne"},
        {"kind", kind_name(cert.kind)},
        {"committee", instance.set_to_string(cert.committee)},
        {"profile", profile_to_string(instance, cert.profile)}},
       text.str());
  return kExitOk;
}

int check_monotonicity(const GlobalOptions& opts, const std::string& property,
                       long long trials, bool exhaustive) {
  const bool rrm = property == "rrm";
  long long failures = 0;
  std::string detail;

  auto run_one = [&](const ElectionInstance& instance, const RuleSpec& rule,
                     long long instance_trials) {
    MonotonicityResult result =
        rrm ? check_relative_rank_monotonicity(instance, rule, instance_trials, opts.seed)
            : check_monotonic_robustness(instance, rule, instance_trials, opts.seed);
    if (exhaustive && instance.candidate_count() <= 3 && instance.voter_count() <= 3) {
      MonotonicityResult ex = rrm
                                  ? check_relative_rank_monotonicity_exhaustive(instance, rule)
                                  : check_monotonic_robustness_exhaustive(instance, rule);
      if (!ex.passed) result = ex;
    }
    if (!result.passed) {
      ++failures;
      if (detail.empty() && result.counterexample) {
        detail = "candidate " + instance.name(result.counterexample->candidate) +
                 " dropped from " + instance.set_to_string(result.counterexample->before) +
                 " to " + instance.set_to_string(result.counterexample->after);
      }
    }
  };

  if (!opts.instance_path.empty()) {
    ElectionInstance instance = require_instance(opts);
    run_one(instance, make_rule(opts, instance), trials);
  } else {
    // No instance given: sweep seeded random instances so the total trial
    // count matches the request.
    const int batch = 200;
    const long long per_instance = std::max<long long>(1, trials / batch);
    for (int i = 0; i < batch; ++i) {
      Rng rng(mix_seed(opts.seed, 0xabcdu + i));
      GeneratorConfig gen;
      gen.m = static_cast<int>(rng.range(2, 6));
      gen.n = static_cast<int>(rng.range(1, 5));
      gen.k = 1 + rng.below_int(gen.m);
      gen.owa = OwaScheme::kRandomAny;
      ElectionInstance instance = generate_instance(gen, mix_seed(opts.seed, i));
      RuleSpec rule = RuleSpec::standard_av();
      if (opts.rule_name == "weighted") {
        std::vector<Rational> weights;
        for (int c = 0; c < gen.m; ++c)
          weights.push_back(Rational(rng.range(1, 5), rng.range(1, 3)));
        rule = RuleSpec::candidate_weighted(std::move(weights));
      }
      run_one(instance, rule, per_instance);
    }
  }

  std::ostringstream text;
  text << property << (failures == 0 ? " holds" : " VIOLATED") << "\n";
  if (!detail.empty()) text << "  " << detail << "\n";
  emit(opts,
       {{"command", "check"}, {"property", property}, {"passed", failures == 0},
        {"detail", detail}},
       text.str());
  return failures == 0 ? kExitOk : kExitViolated;
}

int cmd_check(const GlobalOptions& opts, const std::string& property, long long trials,
              bool exhaustive) {
  if (property == "rrm" || property == "robust")
    return check_monotonicity(opts, property, trials, exhaustive);

  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);

  if (property == "lazy-scores" || property == "dichotomy" || property == "sigma") {
    EnumerationResult result = enumerate_lazy_pruned(instance, rule);
    long long violations = 0;
    std::string detail;
    for (const auto& cert : result.certificates) {
      if (property == "lazy-scores") {
        if (!lazy_score_facts_hold(instance, cert.profile, cert.committee)) ++violations;
      } else if (property == "dichotomy") {
        if (classify_lazy_dichotomy(instance, cert) == LazyDichotomy::kViolation)
          ++violations;
      } else {
        if (classify_lazy_dichotomy(instance, cert) != LazyDichotomy::kInsideIdeal)
          continue;
        SigmaCheck check = check_sigma_condition(instance, cert);
        if (!check.passed) {
          ++violations;
          detail = check.detail;
        }
      }
    }
    std::ostringstream text;
    text << property << (violations == 0 ? " holds" : " VIOLATED") << " over "
         << result.certificates.size() << " lazy certificates\n";
    if (!detail.empty()) text << "  " << detail << "\n";
    emit(opts,
         {{"command", "check"}, {"property", property}, {"passed", violations == 0},
          {"certificates", result.certificates.size()}},
         text.str());
    return violations == 0 ? kExitOk : kExitViolated;
  }

  if (property == "k1") {
    std::vector<Committee> predicted = k1_characterization(instance, rule);
    EnumerationResult enumerated = enumerate_equilibria(instance, rule,
                                                        EquilibriumKind::kLazy);
    bool match = predicted == enumerated.committees;
    std::ostringstream text;
    text << "k1 characterisation " << (match ? "matches" : "DIFFERS from")
         << " enumeration:";
    for (Committee w : enumerated.committees) text << " " << instance.set_to_string(w);
    text << "\n";
    json pj = json::array(), ej = json::array();
    for (Committee w : predicted) pj.push_back(instance.set_to_string(w));
    for (Committee w : enumerated.committees) ej.push_back(instance.set_to_string(w));
    emit(opts,
         {{"command", "check"}, {"property", "k1"}, {"passed", match},
          {"predicted", pj}, {"enumerated", ej}},
         text.str());
    return match ? kExitOk : kExitViolated;
  }

  throw config_error("unknown property '" + property + "'");
}

int cmd_verify(const GlobalOptions& opts, const std::string& kind_text,
               const std::string& ballots) {
  ElectionInstance instance = require_instance(opts);
  RuleSpec rule = make_rule(opts, instance);
  BallotProfile profile = parse_profile(instance, ballots);
  VerifyResult result =
      verify_equilibrium(instance, rule, profile, kind_from_name(kind_text));
  if (verified(result)) {
    const EquilibriumCertificate& cert = certificate(result);
    std::ostringstream text;
    text << kind_text << "-PNE verified, committee "
         << instance.set_to_string(cert.committee) << "\n";
    emit(opts,
         {{"command", "verify"}, {"kind", kind_text}, {"verified", true},
          {"committee", instance.set_to_string(cert.committee)}},
         text.str());
    return kExitOk;
  }
  const DeviationWitness& dev = witness(result);
  emit(opts,
       {{"command", "verify"}, {"kind", kind_text}, {"verified", false},
        {"witness", witness_json(instance, dev)}},
       "not a " + kind_text + "-PNE: " + witness_text(instance, dev) + "\n");
  return kExitViolated;
}

int cmd_experiment(const GlobalOptions& opts, const std::string& config_path,
                   const std::string& out_path) {
  ExperimentConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw config_error("cannot open experiment config '" + config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = ExperimentConfig::from_json_text(buffer.str());
  } else {
    config.analyses = {"br-stats", "lazy-existence", "sincere-existence", "welfare"};
    config.seed = opts.seed;
  }
  if (opts.restriction >= 0) config.restriction = opts.restriction;
  Report report = run_experiment(config);
  const std::string& body = machine(opts) ? report.machine : report.human;
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw config_error("cannot write report to '" + out_path + "'");
    out << body;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-winner approval voting: elections, best responses, equilibria"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--instance", opts.instance_path, "instance file")->envname("MWAV_INSTANCE");
  app.add_option("--rule", opts.rule_name, "av|weighted");
  app.add_option("--weights", opts.weights_text, "per-candidate weights for --rule weighted");
  app.add_option("--restriction", opts.restriction, "ballot-length limit R");
  app.add_option("--seed", opts.seed, "random seed");
  app.add_option("--format", opts.format, "text|machine");
  app.fallthrough();

  GeneratorConfig gen_config;
  std::string gen_out, gen_utilities = "borda", gen_owa = "additive";
  bool gen_fixed_priority = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--m", gen_config.m, "candidates");
  gen->add_option("--n", gen_config.n, "voters");
  gen->add_option("--k", gen_config.k, "committee size");
  gen->add_option("--utilities", gen_utilities, "borda|random-rational");
  gen->add_option("--owa", gen_owa, "best|worst|additive|random-full-rank|random-any");
  gen->add_flag("--fixed-priority", gen_fixed_priority, "identity tie-break order");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  std::string ballots;
  CLI::App* elect_cmd = app.add_subcommand("elect", "evaluate one ballot profile");
  elect_cmd->add_option("--ballots", ballots, "';'-separated ballots, e.g. \"a,b;;c\"")
      ->required();

  int voter = 0;
  CLI::App* br = app.add_subcommand("best-response", "exhaustive best-response report");
  br->add_option("--voter", voter, "deviating voter")->required();
  br->add_option("--ballots", ballots, "profile; the voter's own slot is ignored")
      ->required();

  CLI::App* mbr = app.add_subcommand("mbr", "minimal best response");
  mbr->add_option("--voter", voter)->required();
  mbr->add_option("--ballots", ballots)->required();

  CLI::App* sincere_br = app.add_subcommand("sincere-br", "best preference prefix");
  sincere_br->add_option("--voter", voter)->required();
  sincere_br->add_option("--ballots", ballots)->required();

  std::string witness_mode = "synthesize";
  unsigned long long budget = 1ull << 20;
  CLI::App* constraining = app.add_subcommand(
      "constraining", "search for a profile where the length limit costs utility");
  constraining->add_option("--voter", voter)->required();
  constraining->add_option("--mode", witness_mode, "synthesize|fixed");
  constraining->add_option("--budget", budget, "max others-profiles to enumerate");

  std::string kind = "lazy";
  bool pruned = false;
  std::uint64_t cap = 1ull << 24;
  CLI::App* find = app.add_subcommand("find-pne", "enumerate pure equilibria");
  find->add_option("--kind", kind, "plain|lazy|sincere")->required();
  find->add_flag("--pruned", pruned, "score-constrained lazy enumeration");
  find->add_option("--cap", cap, "profile-space cap");

  bool nonempty = false;
  CLI::App* construct = app.add_subcommand("construct-pne", "build an equilibrium");
  construct->add_option("--kind", kind, "containment|sincere")->required();
  construct->add_flag("--nonempty", nonempty, "voters may not abstain (sincere only)");

  CLI::App* verify = app.add_subcommand("verify", "verify a profile as an equilibrium");
  verify->add_option("--kind", kind, "plain|lazy|sincere")->required();
  verify->add_option("--ballots", ballots)->required();

  std::string property;
  long long trials = 10000;
  bool exhaustive = false;
  CLI::App* check = app.add_subcommand("check", "property checks");
  check->add_option("--property", property, "rrm|robust|lazy-scores|dichotomy|sigma|k1")
      ->required();
  check->add_option("--trials", trials, "sampled trials for rrm/robust");
  check->add_flag("--exhaustive", exhaustive, "also run exhaustively when tiny");

  std::string config_path, out_path;
  CLI::App* experiment = app.add_subcommand("experiment", "batch analysis report");
  experiment->add_option("--config", config_path, "JSON config file");
  experiment->add_option("--out", out_path, "report output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      gen_config.utilities = utility_scheme_from_string(gen_utilities);
      gen_config.owa = owa_scheme_from_string(gen_owa);
      gen_config.random_priority = !gen_fixed_priority;
      return cmd_gen(opts, gen_config, gen_out);
    }
    if (elect_cmd->parsed()) return cmd_elect(opts, ballots);
    if (br->parsed()) return cmd_best_response(opts, voter, ballots, false, false);
    if (mbr->parsed()) return cmd_best_response(opts, voter, ballots, true, false);
    if (sincere_br->parsed()) return cmd_best_response(opts, voter, ballots, false, true);
    if (constraining->parsed()) return cmd_constraining(opts, voter, witness_mode, budget);
    if (find->parsed()) return cmd_find_pne(opts, kind, pruned, cap);
    if (construct->parsed()) return cmd_construct(opts, kind, nonempty);
    if (verify->parsed()) return cmd_verify(opts, kind, ballots);
    if (check->parsed()) return cmd_check(opts, property, trials, exhaustive);
    if (experiment->parsed()) return cmd_experiment(opts, config_path, out_path);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
