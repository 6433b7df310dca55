#include "mwav/experiment.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mwav/equilibrium.hpp"
#include "mwav/instance_io.hpp"
#include "mwav/rng.hpp"

namespace mwav {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "mwav-report-v1";

const std::vector<std::string>& known_analyses() {
  static const std::vector<std::string> names = {
      "br-stats", "restriction-sweep", "lazy-existence", "sincere-existence", "welfare"};
  return names;
}

bool selected(const ExperimentConfig& config, const std::string& name) {
  return std::find(config.analyses.begin(), config.analyses.end(), name) !=
         config.analyses.end();
}

BallotProfile random_others(const ElectionInstance& instance, Rng& rng) {
  BallotProfile profile(instance.voter_count());
  for (auto& ballot : profile)
    ballot = Ballot::from_mask(
        static_cast<std::uint32_t>(rng.below(1u << instance.candidate_count())));
  return profile;
}

json certificate_json(const ElectionInstance& instance,
                      const EquilibriumCertificate& cert) {
  json j;
  j["committee"] = instance.set_to_string(cert.committee);
  j["profile"] = profile_to_string(instance, cert.profile);
  json per_voter = json::array();
  for (std::size_t i = 0; i < cert.evidence.size(); ++i) {
    const VoterEvidence& e = cert.evidence[i];
    per_voter.push_back({{"voter", i},
                         {"utility", e.utility.str()},
                         {"achievable", e.achievable.str()},
                         {"ballot_size", e.ballot_size},
                         {"mbr_size", e.mbr_size},
                         {"sincere", e.sincere}});
  }
  j["evidence"] = per_voter;
  return j;
}

struct InstanceOutcome {
  json record;
  bool lazy_exists = false;
  bool lazy_ran = false;
  bool sincere_exists = false;
  bool sincere_ran = false;
};

InstanceOutcome analyze_instance(const ExperimentConfig& config, int index) {
  Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(index)));
  GeneratorConfig gen;
  gen.m = static_cast<int>(rng.range(config.m_min, config.m_max));
  gen.n = static_cast<int>(rng.range(config.n_min, config.n_max));
  gen.k = std::min(gen.m, static_cast<int>(rng.range(config.k_min, config.k_max)));
  gen.utilities = config.utilities;
  gen.owa = config.owa;
  const std::uint64_t instance_seed = mix_seed(config.seed, 0x1000u + index);
  ElectionInstance instance = generate_instance(gen, instance_seed);
  RuleSpec rule = RuleSpec::standard_av();
  if (config.rule == RuleKind::kCandidateWeighted) {
    std::vector<Rational> weights;
    for (int c = 0; c < gen.m; ++c)
      weights.push_back(Rational(rng.range(1, 4), rng.range(1, 3)));
    rule = RuleSpec::candidate_weighted(std::move(weights));
  }

  InstanceOutcome outcome;
  json& record = outcome.record;
  record["index"] = index;
  record["seed"] = instance_seed;
  record["m"] = gen.m;
  record["n"] = gen.n;
  record["k"] = gen.k;
  record["instance"] = serialize_instance(instance);
  json analyses = json::object();
  json skipped = json::object();

  if (selected(config, "br-stats")) {
    LengthRestriction restriction = config.restriction
                                        ? LengthRestriction(*config.restriction)
                                        : LengthRestriction::unrestricted();
    json stats = json::array();
    int violations = 0;
    for (int i = 0; i < gen.n; ++i) {
      BallotProfile others = random_others(instance, rng);
      auto [size, ballot] = minimal_best_response(instance, rule, i, others, restriction);
      if (!restriction.is_restricted(gen.m) && size > instance.j_star_of(i)) ++violations;
      stats.push_back({{"voter", i},
                       {"j_star", instance.j_star_of(i)},
                       {"mbr_size", size},
                       {"mbr_ballot", instance.set_to_string(ballot)},
                       {"others", profile_to_string(instance, others)}});
    }
    analyses["br-stats"] = {{"per_voter", stats}, {"bound_violations", violations}};
  }

  if (selected(config, "restriction-sweep")) {
    json sweep = json::array();
    for (int i = 0; i < gen.n; ++i) {
      BallotProfile others = random_others(instance, rng);
      json row = json::array();
      bool monotone = true;
      Rational previous;
      for (int limit = 1; limit <= gen.m; ++limit) {
        BestResponseReport report = brute_force_best_responses(
            instance, rule, i, others, LengthRestriction(limit));
        if (limit > 1 && report.restricted_utility < previous) monotone = false;
        previous = report.restricted_utility;
        row.push_back(report.restricted_utility.str());
      }
      sweep.push_back({{"voter", i},
                       {"others", profile_to_string(instance, others)},
                       {"optimum_by_limit", row},
                       {"monotone", monotone}});
    }
    analyses["restriction-sweep"] = sweep;
  }

  std::vector<Committee> lazy_committees;
  std::optional<EquilibriumCertificate> sincere_cert;

  if (selected(config, "lazy-existence")) {
    outcome.lazy_ran = true;
    try {
      EnumerationResult lazy = enumerate_lazy_pruned(instance, rule);
      outcome.lazy_exists = !lazy.certificates.empty();
      lazy_committees = lazy.committees;
      json committees = json::array();
      for (Committee w : lazy.committees) committees.push_back(instance.set_to_string(w));
      json certs = json::array();
      for (const auto& cert : lazy.certificates)
        certs.push_back(certificate_json(instance, cert));
      analyses["lazy-existence"] = {{"exists", outcome.lazy_exists},
                                    {"committees", committees},
                                    {"certificates", certs},
                                    {"profiles_scanned", lazy.profiles_scanned}};
    } catch (const error& e) {
      outcome.lazy_ran = false;
      skipped["lazy-existence"] = e.what();
    }
  }

  if (selected(config, "sincere-existence")) {
    if (gen.n > gen.m && config.rule == RuleKind::kStandardAv) {
      outcome.sincere_ran = true;
      sincere_cert = construct_sincere_pne(instance, rule);
      outcome.sincere_exists = true;
      analyses["sincere-existence"] = {
          {"exists", true}, {"certificate", certificate_json(instance, *sincere_cert)}};
    } else {
      skipped["sincere-existence"] =
          gen.n > gen.m ? "construction requires standard AV"
                        : "construction requires more voters than candidates";
    }
  }

  if (selected(config, "welfare")) {
    if (!lazy_committees.empty() && sincere_cert) {
      // Welfare sums assume utilities are comparable across voters.
      Rational best_lazy = welfare(instance, lazy_committees.front());
      for (Committee w : lazy_committees)
        best_lazy = std::max(best_lazy, welfare(instance, w));
      Rational sincere_welfare = welfare(instance, *sincere_cert);
      analyses["welfare"] = {{"best_lazy", best_lazy.str()},
                             {"sincere_construction", sincere_welfare.str()},
                             {"lazy_at_least_sincere", best_lazy >= sincere_welfare}};
    } else {
      skipped["welfare"] = "needs both a lazy and a sincere equilibrium";
    }
  }

  record["analyses"] = analyses;
  if (!skipped.empty()) record["skipped"] = skipped;
  return outcome;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("bad experiment config: ") + e.what());
  }
  ExperimentConfig config;
  auto range = [&](const char* key, int& lo, int& hi) {
    if (!j.contains(key)) return;
    if (j[key].is_array()) {
      lo = j[key].at(0).get<int>();
      hi = j[key].at(1).get<int>();
    } else {
      lo = hi = j[key].get<int>();
    }
  };
  range("m", config.m_min, config.m_max);
  range("n", config.n_min, config.n_max);
  range("k", config.k_min, config.k_max);
  if (j.contains("count")) config.count = j["count"].get<int>();
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("utilities"))
    config.utilities = utility_scheme_from_string(j["utilities"].get<std::string>());
  if (j.contains("owa")) config.owa = owa_scheme_from_string(j["owa"].get<std::string>());
  if (j.contains("rule")) {
    std::string rule = j["rule"].get<std::string>();
    if (rule == "av")
      config.rule = RuleKind::kStandardAv;
    else if (rule == "weighted")
      config.rule = RuleKind::kCandidateWeighted;
    else
      throw config_error("unknown rule '" + rule + "'");
  }
  if (j.contains("restriction") && !j["restriction"].is_null())
    config.restriction = j["restriction"].get<int>();
  if (j.contains("analyses"))
    config.analyses = j["analyses"].get<std::vector<std::string>>();

  if (config.count < 0) throw config_error("count must be nonnegative");
  if (config.m_min < 1 || config.m_max < config.m_min)
    throw config_error("bad m range");
  if (config.n_min < 1 || config.n_max < config.n_min)
    throw config_error("bad n range");
  if (config.k_min < 1 || config.k_max < config.k_min)
    throw config_error("bad k range");
  if (config.k_min > config.m_max)
    throw config_error("committee size range exceeds candidate range");
  for (const std::string& name : config.analyses)
    if (std::find(known_analyses().begin(), known_analyses().end(), name) ==
        known_analyses().end())
      throw config_error("unknown analysis '" + name + "'");
  return config;
}

std::string ExperimentConfig::to_json_text() const {
  json j;
  j["m"] = {m_min, m_max};
  j["n"] = {n_min, n_max};
  j["k"] = {k_min, k_max};
  j["count"] = count;
  j["seed"] = seed;
  j["utilities"] = to_string(utilities);
  j["owa"] = to_string(owa);
  j["rule"] = rule == RuleKind::kStandardAv ? "av" : "weighted";
  if (restriction)
    j["restriction"] = *restriction;
  else
    j["restriction"] = nullptr;
  j["analyses"] = analyses;
  return j.dump(2);
}

Report run_experiment(const ExperimentConfig& config, bool parallel) {
  std::vector<InstanceOutcome> outcomes(config.count);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int index = 0; index < config.count; ++index)
    outcomes[index] = analyze_instance(config, index);

  json machine;
  machine["schema"] = kSchema;
  machine["config"] = json::parse(config.to_json_text());
  json instances = json::array();
  long long lazy_ran = 0, lazy_exists = 0, sincere_ran = 0, sincere_exists = 0;
  for (auto& outcome : outcomes) {
    instances.push_back(std::move(outcome.record));
    lazy_ran += outcome.lazy_ran;
    lazy_exists += outcome.lazy_exists;
    sincere_ran += outcome.sincere_ran;
    sincere_exists += outcome.sincere_exists;
  }
  machine["instances"] = std::move(instances);
  json aggregates;
  aggregates["count"] = config.count;
  if (lazy_ran > 0) {
    aggregates["lazy_existing"] = lazy_exists;
    aggregates["lazy_checked"] = lazy_ran;
    aggregates["lazy_existence_rate"] = Rational(lazy_exists, lazy_ran).str();
  }
  if (sincere_ran > 0) {
    aggregates["sincere_existing"] = sincere_exists;
    aggregates["sincere_checked"] = sincere_ran;
    aggregates["sincere_existence_rate"] = Rational(sincere_exists, sincere_ran).str();
  }
  machine["aggregates"] = aggregates;

  Report report;
  report.machine = machine.dump(2) + "\n";

  std::ostringstream human;
  human << "experiment: " << config.count << " instances, seed " << config.seed << "\n";
  for (const auto& inst : machine["instances"]) {
    human << "  #" << inst["index"] << " m=" << inst["m"] << " n=" << inst["n"]
          << " k=" << inst["k"];
    const json& an = inst["analyses"];
    if (an.contains("lazy-existence")) {
      human << " lazy=" << (an["lazy-existence"]["exists"].get<bool>() ? "yes" : "no");
      if (an["lazy-existence"]["exists"].get<bool>()) {
        human << " [";
        bool first = true;
        for (const auto& c : an["lazy-existence"]["committees"]) {
          if (!first) human << " ";
          human << c.get<std::string>();
          first = false;
        }
        human << "]";
      }
    }
    if (an.contains("sincere-existence"))
      human << " sincere=" << (an["sincere-existence"]["exists"].get<bool>() ? "yes" : "no");
    if (an.contains("br-stats"))
      human << " mbr-bound-violations="
            << an["br-stats"]["bound_violations"].get<int>();
    if (inst.contains("skipped")) human << " (some analyses skipped)";
    human << "\n";
  }
  human << "aggregates:";
  if (lazy_ran > 0)
    human << " lazy-existence " << lazy_exists << "/" << lazy_ran;
  if (sincere_ran > 0)
    human << " sincere-existence " << sincere_exists << "/" << sincere_ran;
  human << "\n";
  report.human = human.str();
  return report;
}

}  // namespace mwav
