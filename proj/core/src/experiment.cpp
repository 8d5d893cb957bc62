#include "moddev/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "moddev/concentration.hpp"
#include "moddev/numeric.hpp"

namespace moddev {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& message) {
  fail(errc::config_error, message);
}

void check_keys(const json& obj, const char* where,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) config_fail("unknown key \"" + it.key() + "\" in " + where);
  }
}

const json& require_key(const json& obj, const char* where, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) config_fail(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) config_fail(where + " must be a number");
  return v.get<double>();
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) config_fail(where + " must be an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) config_fail(where + " must be a string");
  return v.get<std::string>();
}

std::vector<double> as_number_array(const json& v, const std::string& where) {
  if (!v.is_array()) config_fail(where + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ThresholdPolicy parse_policy(const json& v) {
  if (!v.is_object()) config_fail("policy must be an object");
  const std::string kind = as_string(require_key(v, "policy", "type"), "policy.type");
  if (kind == "moderate") {
    check_keys(v, "policy", {"type", "eta", "eps1", "eps2"});
    ModeratePolicy p;
    p.eta = as_number(require_key(v, "policy", "eta"), "policy.eta");
    p.eps1 = as_number(require_key(v, "policy", "eps1"), "policy.eps1");
    p.eps2 = as_number(require_key(v, "policy", "eps2"), "policy.eps2");
    if (!(p.eta > 0.5 && p.eta < 1.0)) config_fail("policy.eta must lie in (1/2, 1)");
    if (!(p.eps1 > 0.0) || !(p.eps2 > 0.0)) {
      config_fail("policy.eps1 and policy.eps2 must be positive");
    }
    return p;
  }
  if (kind == "fixed") {
    check_keys(v, "policy", {"type", "lambda_hi", "lambda_lo"});
    FixedPolicy p;
    p.lambda_hi = as_number(require_key(v, "policy", "lambda_hi"), "policy.lambda_hi");
    p.lambda_lo = as_number(require_key(v, "policy", "lambda_lo"), "policy.lambda_lo");
    return p;
  }
  config_fail("policy.type must be \"moderate\" or \"fixed\"");
}

std::vector<std::int64_t> parse_n_grid(const json& v) {
  if (!v.is_array() || v.empty()) config_fail("n_grid must be a nonempty array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t n = as_integer(v[i], "n_grid[" + std::to_string(i) + "]");
    if (n < 1) config_fail("n_grid entries must be positive");
    if (!out.empty() && n <= out.back()) config_fail("n_grid must be strictly increasing");
    out.push_back(n);
  }
  return out;
}

McConfig parse_mc(const json& v) {
  if (!v.is_object()) config_fail("mc must be an object");
  check_keys(v, "mc", {"samples", "seed", "streams", "tilt"});
  McConfig mc;
  mc.samples = as_integer(require_key(v, "mc", "samples"), "mc.samples");
  if (mc.samples < 1) config_fail("mc.samples must be >= 1");
  if (v.contains("seed")) {
    mc.seed = static_cast<std::uint64_t>(as_integer(v["seed"], "mc.seed"));
  }
  if (v.contains("streams")) {
    mc.streams = as_integer(v["streams"], "mc.streams");
    if (mc.streams < 1) config_fail("mc.streams must be >= 1");
  }
  if (v.contains("tilt")) {
    const json& tilt = v["tilt"];
    if (tilt.is_string()) {
      const std::string name = tilt.get<std::string>();
      if (name == "none") {
        mc.tilt = TiltSpec::none();
      } else if (name == "auto") {
        mc.tilt = TiltSpec::automatic();
      } else {
        config_fail("mc.tilt must be \"none\", \"auto\", or {\"t\": value}");
      }
    } else if (tilt.is_object()) {
      check_keys(tilt, "mc.tilt", {"t"});
      const double t = as_number(require_key(tilt, "mc.tilt", "t"), "mc.tilt.t");
      if (!(t >= 0.0 && t <= 1.0)) config_fail("mc.tilt.t must lie in [0,1]");
      mc.tilt = TiltSpec::manual(t);
    } else {
      config_fail("mc.tilt must be \"none\", \"auto\", or {\"t\": value}");
    }
  }
  return mc;
}

OutputSpec parse_output(const json& v) {
  if (!v.is_object()) config_fail("output must be an object");
  check_keys(v, "output", {"format", "path"});
  OutputSpec out;
  if (v.contains("format")) {
    const std::string f = as_string(v["format"], "output.format");
    if (f == "csv") {
      out.format = OutputFormat::Csv;
    } else if (f == "json") {
      out.format = OutputFormat::Json;
    } else {
      config_fail("output.format must be \"csv\" or \"json\"");
    }
  }
  if (v.contains("path")) out.path = as_string(v["path"], "output.path");
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) config_fail("top level must be an object");
  check_keys(doc, "config",
             {"schema", "hypothesis", "policy", "n_grid", "mc", "output", "budget"});
  const std::int64_t schema = as_integer(require_key(doc, "config", "schema"), "schema");
  if (schema != 1) config_fail("unsupported schema " + std::to_string(schema));

  const json& hyp = require_key(doc, "config", "hypothesis");
  if (!hyp.is_object()) config_fail("hypothesis must be an object");
  check_keys(hyp, "hypothesis", {"p1", "p2", "priors"});
  std::vector<double> p1 = as_number_array(require_key(hyp, "hypothesis", "p1"), "hypothesis.p1");
  std::vector<double> p2 = as_number_array(require_key(hyp, "hypothesis", "p2"), "hypothesis.p2");
  const std::vector<double> priors =
      as_number_array(require_key(hyp, "hypothesis", "priors"), "hypothesis.priors");
  if (priors.size() != 2) config_fail("hypothesis.priors must have exactly 2 entries");

  ExperimentConfig cfg{
      HypothesisPair(Pmf(std::move(p1)), Pmf(std::move(p2)), priors[0], priors[1]),
      parse_policy(require_key(doc, "config", "policy")),
      parse_n_grid(require_key(doc, "config", "n_grid")),
      std::nullopt,
      OutputSpec{},
      kDefaultTypeBudget,
  };
  if (doc.contains("mc")) cfg.mc = parse_mc(doc["mc"]);
  if (doc.contains("output")) cfg.output = parse_output(doc["output"]);
  if (doc.contains("budget")) {
    cfg.budget = as_integer(doc["budget"], "budget");
    if (cfg.budget < 1) config_fail("budget must be >= 1");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) config_fail("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

namespace {

// ln of the one-sided refined bound on alpha1 at per-symbol deviation alpha,
// taken from the exponent so large n cannot underflow.
double log_refined_one_sided(std::int64_t n, const LlrProfile& prof, double alpha) {
  const RefinedParams params(prof.d1, prof.var1, alpha);
  const BoundReport rep = refined_bound(n, params, true);
  if (rep.validity == Validity::DeltaExceedsOne) return kNegInf;
  return -static_cast<double>(n) * rep.exponent_per_n;
}

}  // namespace

Table run_bounds(const ExperimentConfig& config) {
  const LlrProfile prof = llr_profile(config.hypothesis);
  const ModeratePolicy* mod = std::get_if<ModeratePolicy>(&config.policy);
  Table t;
  if (mod) {
    t.columns = {"n",        "azuma",           "refined",  "expanded",
                 "validity", "scaled_bound_exp", "limit_exp"};
    t.log_probability = {false, true, true, true, false, false, false};
  } else {
    t.columns = {"n", "azuma", "refined"};
    t.log_probability = {false, true, true};
  }
  for (const std::int64_t n : config.n_grid) {
    double alpha;
    if (mod) {
      alpha = mod->eps1 * std::pow(static_cast<double>(n), mod->eta - 1.0);
    } else {
      const BoundThresholds thr = bind_thresholds(config.policy, prof, n);
      alpha = prof.d12 - thr.hi;
    }
    const BoundReport az = azuma_bound(n, prof.d1, alpha * static_cast<double>(n), false);
    const double log_azuma = std::log(2.0) - static_cast<double>(n) * az.exponent_per_n;
    const double log_refined = log_refined_one_sided(n, prof, alpha);
    std::vector<Cell> row{Cell{n}, Cell{log_azuma}, Cell{log_refined}};
    if (mod) {
      const BoundReport ex =
          expanded_exponent_bound(n, mod->eta, mod->eps1, prof.d1, prof.var1);
      if (ex.validity == Validity::Valid) {
        row.emplace_back(-static_cast<double>(n) * ex.exponent_per_n);
      } else {
        row.emplace_back(std::monostate{});
      }
      row.emplace_back(std::string(validity_name(ex.validity)));
      const double scale = std::pow(static_cast<double>(n), 1.0 - 2.0 * mod->eta);
      row.emplace_back(scale * log_refined);
      row.emplace_back(-mod->eps1 * mod->eps1 / (2.0 * prof.var1));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table run_exact(const ExperimentConfig& config) {
  const LlrProfile prof = llr_profile(config.hypothesis);
  Table t;
  t.columns = {"n",   "alpha1", "alpha2", "beta1",
               "beta2", "pe1",  "pe2",    "refined_alpha1_bound", "dominates"};
  t.log_probability = {false, true, true, true, true, true, true, true, false};
  for (const std::int64_t n : config.n_grid) {
    const BoundThresholds thr = bind_thresholds(config.policy, prof, n);
    const ErrorProbabilities probs =
        exact_error_probabilities(config.hypothesis, prof, thr, config.budget);
    const double log_bound = log_refined_one_sided(n, prof, prof.d12 - thr.hi);
    t.rows.push_back({Cell{n}, Cell{probs.alpha1}, Cell{probs.alpha2}, Cell{probs.beta1},
                      Cell{probs.beta2}, Cell{probs.pe1}, Cell{probs.pe2}, Cell{log_bound},
                      Cell{probs.alpha1 <= log_bound}});
  }
  return t;
}

Table run_simulate(const ExperimentConfig& config) {
  if (!config.mc) fail(errc::config_error, "simulate needs the mc section");
  const LlrProfile prof = llr_profile(config.hypothesis);
  Table t;
  t.columns = {"n",
               "est_alpha1", "se_alpha1", "ess_alpha1", "z_alpha1",
               "est_alpha2", "se_alpha2", "ess_alpha2", "z_alpha2",
               "est_beta1",  "se_beta1",  "ess_beta1",  "z_beta1",
               "est_beta2",  "se_beta2",  "ess_beta2",  "z_beta2"};
  t.log_probability.assign(t.columns.size(), false);
  for (std::size_t c = 1; c < t.columns.size(); c += 4) t.log_probability[c] = true;

  for (const std::int64_t n : config.n_grid) {
    const BoundThresholds thr = bind_thresholds(config.policy, prof, n);
    std::optional<ErrorProbabilities> exact;
    try {
      exact = exact_error_probabilities(config.hypothesis, prof, thr, config.budget);
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
    }
    struct TailSpec {
      Hypothesis under;
      TailKind kind;
      double threshold;
      double exact_value;
    };
    const double dn = static_cast<double>(n);
    const TailSpec specs[4] = {
        {Hypothesis::H1, TailKind::LeqThreshold, dn * thr.hi, exact ? exact->alpha1 : 0.0},
        {Hypothesis::H1, TailKind::LeqThreshold, dn * thr.lo, exact ? exact->alpha2 : 0.0},
        {Hypothesis::H2, TailKind::GeqThreshold, dn * thr.lo, exact ? exact->beta1 : 0.0},
        {Hypothesis::H2, TailKind::GeqThreshold, dn * thr.hi, exact ? exact->beta2 : 0.0},
    };
    std::vector<Cell> row{Cell{n}};
    for (int tail = 0; tail < 4; ++tail) {
      McConfig mc = *config.mc;
      // Estimates are seeded per (n, tail) so any row is reproducible in
      // isolation, independent of its position in the grid.
      mc.seed = splitmix64(config.mc->seed, static_cast<std::uint64_t>(4 * n + tail));
      const McEstimate est = estimate_tail(config.hypothesis, prof, specs[tail].under, n,
                                           specs[tail].kind, specs[tail].threshold, mc);
      row.emplace_back(est.log_p_hat);
      row.emplace_back(est.std_err);
      row.emplace_back(est.effective_sample_size);
      Cell z{std::monostate{}};
      if (exact) {
        const double ev = specs[tail].exact_value;
        if (est.log_p_hat == ev) {
          z = 0.0;
        } else {
          const double diff = std::fabs(est.log_p_hat - ev);
          if (std::isfinite(diff) && std::isfinite(est.std_err) && est.std_err > 0.0) {
            z = diff / est.std_err;
          }
        }
      }
      row.push_back(std::move(z));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table run_mdp_sweep(const ExperimentConfig& config) {
  const ModeratePolicy* mod = std::get_if<ModeratePolicy>(&config.policy);
  if (!mod) fail(errc::config_error, "mdp-sweep needs a moderate policy");
  const LlrProfile prof = llr_profile(config.hypothesis);
  const std::int64_t n0 = n0_threshold(mod->eta, mod->eps1, prof.d1);
  const double azuma_limit = -mod->eps1 * mod->eps1 / (2.0 * prof.d1 * prof.d1);
  const double refined_limit = -mod->eps1 * mod->eps1 / (2.0 * prof.var1);
  Table t;
  t.columns = {"n",           "alpha1_exact", "scaled_log_alpha1", "bound_exponent",
               "azuma_limit", "refined_limit", "n0_ok"};
  t.log_probability = {false, true, false, false, false, false, false};
  for (const std::int64_t n : config.n_grid) {
    const double hi = moderate_hi(*mod, prof.d12, n);
    const TailDistribution dist =
        llr_distribution(config.hypothesis, prof, n, Hypothesis::H1, config.budget);
    const double alpha1 =
        exact_tail(dist, TailKind::LeqThreshold, static_cast<double>(n) * hi);
    const double scale = std::pow(static_cast<double>(n), 1.0 - 2.0 * mod->eta);
    const BoundReport ex =
        expanded_exponent_bound(n, mod->eta, mod->eps1, prof.d1, prof.var1);
    Cell bound_exponent{std::monostate{}};
    if (ex.validity == Validity::Valid) {
      bound_exponent = -scale * static_cast<double>(n) * ex.exponent_per_n;
    }
    t.rows.push_back({Cell{n}, Cell{alpha1}, Cell{scale * alpha1}, std::move(bound_exponent),
                      Cell{azuma_limit}, Cell{refined_limit}, Cell{n >= n0}});
  }
  return t;
}

}  // namespace moddev
