// Command-line front end: wires experiment configs to the library and emits
// CSV or JSON-lines records.
//
// Exit codes: 0 success, 2 invalid input, 3 degenerate result (zero hits,
// unavailable diagnostic, failed model check).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrw/config.hpp"
#include "hrw/ldp.hpp"
#include "hrw/montecarlo.hpp"
#include "hrw/reinsurance.hpp"
#include "hrw/walk.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // csv | jsonl

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
  }
};

// Flag overrides collected as config keys so that file values and flags run
// through one validation path, flags winning.
struct Overrides {
  std::vector<std::pair<std::string, std::string>> kv;

  void set(const std::string& key, const std::string& value) { kv.emplace_back(key, value); }
};

hrw::ConfigView make_view(const std::string& config_path, const Overrides& overrides) {
  hrw::ConfigMap map;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    map = hrw::parse_config_text(buf.str());
  }
  for (const auto& [key, value] : overrides.kv) map[key] = value;
  return hrw::ConfigView(std::move(map));
}

struct CommonRun {
  std::uint64_t seed = 0;
  unsigned shards = 1;
  Output output;
};

CommonRun take_common(hrw::ConfigView& view) {
  CommonRun c;
  const std::string rng_name = view.take_or("rng", hrw::Rng::kName);
  if (rng_name != hrw::Rng::kName)
    throw std::invalid_argument("unsupported generator '" + rng_name + "' (available: " +
                                std::string(hrw::Rng::kName) + ")");
  c.seed = view.take_u64("seed", std::uint64_t{1});
  c.shards = static_cast<unsigned>(view.take_u64("shards", std::uint64_t{1}));
  c.output.path = view.take_or("out", "");
  c.output.format = view.take_or("format", "csv");
  if (c.output.format != "csv" && c.output.format != "jsonl")
    throw std::invalid_argument("format must be csv or jsonl");
  return c;
}

hrw::EstimateRecord make_record(const hrw::IncrementSpec& spec, const hrw::TailEstimate& est,
                                double theory) {
  const hrw::TailExponent& e = spec.radius.exponent();
  hrw::EstimateRecord r;
  r.family = hrw::tail_family_name(e.family());
  r.beta_or_p = e.shape_parameter();
  r.d = spec.dim();
  r.n = est.n;
  r.a = est.a;
  r.trials = est.trials;
  r.hits = est.hits;
  r.p_hat = est.p_hat;
  r.ratio = est.ratio_defined ? est.ratio : std::numeric_limits<double>::quiet_NaN();
  r.ci_ratio_low = est.ratio_ci_low;
  r.ci_ratio_high = est.ratio_ci_high;
  r.theory = theory;
  return r;
}

json estimate_json(const hrw::EstimateRecord& r) {
  return json{{"family", r.family},
              {"beta_or_p", r.beta_or_p},
              {"d", r.d},
              {"n", r.n},
              {"a", r.a},
              {"trials", r.trials},
              {"hits", r.hits},
              {"p_hat", r.p_hat},
              {"ratio", std::isnan(r.ratio) ? json() : json(r.ratio)},
              {"ci_ratio_low", std::isnan(r.ci_ratio_low) ? json() : json(r.ci_ratio_low)},
              {"ci_ratio_high", std::isnan(r.ci_ratio_high) ? json() : json(r.ci_ratio_high)},
              {"theory", r.theory}};
}

void emit_estimate(const CommonRun& common, const hrw::IncrementSpec& spec,
                   const hrw::TailEstimate& est, double theory) {
  const hrw::EstimateRecord record = make_record(spec, est, theory);
  if (common.output.format == "csv") {
    common.output.write(hrw::estimate_csv_header() + hrw::estimate_csv_row(record));
  } else {
    common.output.write(estimate_json(record).dump() + "\n");
  }
}

std::string strategy_text(const hrw::StrategyReport& report, double a, double alpha) {
  std::ostringstream out;
  out << "quota (diagonal)   : " << hrw::vector_to_text(report.q.diag()) << "\n";
  out << "context            : "
      << (report.q.context() == hrw::QuotaContext::Ceding ? "ceding" : "reinsurer") << "\n";
  out << "premium            : " << hrw::format_double(report.premium_value) << "\n";
  out << "objective          : " << hrw::format_double(report.objective) << "\n";
  out << "level a            : " << hrw::format_double(a) << "\n";
  out << "index alpha        : " << hrw::format_double(alpha) << "\n";
  out << "exponent before    : " << hrw::format_double(report.exponent_before) << "\n";
  out << "exponent after     : " << hrw::format_double(report.exponent_after) << "\n";
  const char* status = report.status == hrw::ImprovementStatus::Improves ? "improves"
                       : report.status == hrw::ImprovementStatus::NoImprovement
                           ? "no improvement"
                           : "no-improvement regime";
  out << "status             : " << status << "\n";
  return out.str();
}

json strategy_json(const hrw::StrategyReport& report, double a, double alpha) {
  const char* status = report.status == hrw::ImprovementStatus::Improves ? "improves"
                       : report.status == hrw::ImprovementStatus::NoImprovement
                           ? "no_improvement"
                           : "no_improvement_regime";
  return json{{"q", report.q.diag()},
              {"context", report.q.context() == hrw::QuotaContext::Ceding ? "ceding" : "reinsurer"},
              {"premium", std::isnan(report.premium_value) ? json() : json(report.premium_value)},
              {"objective", std::isnan(report.objective) ? json() : json(report.objective)},
              {"a", a},
              {"alpha", alpha},
              {"exponent_before", report.exponent_before},
              {"exponent_after", report.exponent_after},
              {"status", status}};
}

int run_simulate(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::IncrementSpec spec = hrw::increment_spec_from_config(view);
  const std::uint64_t n = view.take_u64("experiment.n");
  const std::uint64_t paths = view.take_u64("experiment.paths", std::uint64_t{1});
  std::optional<hrw::Vec> monitor;
  if (auto text = view.take("experiment.monitor")) monitor = hrw::parse_vector(*text);
  view.finish();

  std::string out;
  if (common.output.format == "csv") {
    out += "n";
    for (std::size_t i = 1; i <= spec.dim(); ++i) out += ",s_" + std::to_string(i);
    out += ",max_norm,max_proj\n";
  }
  hrw::Rng rng(common.seed);
  for (std::uint64_t path = 0; path < paths; ++path) {
    const hrw::WalkSample ws = hrw::simulate_sum(spec, n, rng, monitor);
    if (common.output.format == "csv") {
      out += std::to_string(ws.n);
      for (double c : ws.s_n) out += "," + hrw::format_double(c);
      out += "," + hrw::format_double(ws.max_norm);
      out += "," + hrw::format_double(ws.max_proj);
      out += "\n";
    } else {
      json rec{{"n", ws.n},
               {"s", ws.s_n},
               {"max_norm", ws.max_norm},
               {"max_proj", ws.has_proj ? json(ws.max_proj) : json()}};
      out += rec.dump() + "\n";
    }
  }
  common.output.write(out);
  return kExitOk;
}

int run_estimate(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::IncrementSpec spec = hrw::increment_spec_from_config(view);
  const std::uint64_t n = view.take_u64("experiment.n");
  const double a = view.take_double("experiment.a");
  const std::uint64_t trials = view.take_u64("experiment.trials");
  const std::string functional_name = view.take_or("experiment.functional", "norm");
  std::optional<hrw::Vec> v;
  if (auto text = view.take("experiment.v")) v = hrw::parse_vector(*text);
  view.finish();

  hrw::Functional functional;
  if (functional_name == "norm")
    functional = hrw::Functional::Norm;
  else if (functional_name == "proj" || functional_name == "projection")
    functional = hrw::Functional::Projection;
  else
    throw std::invalid_argument("functional must be norm or proj");

  const hrw::TailEstimate est =
      hrw::estimate_exceedance(spec, functional, v, n, a, trials, common.seed, common.shards);
  emit_estimate(common, spec, est, -1.0);
  return est.hits == 0 ? kExitDegenerate : kExitOk;
}

int run_set_prob(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::IncrementSpec spec = hrw::increment_spec_from_config(view);
  const std::uint64_t n = view.take_u64("experiment.n");
  const std::uint64_t trials = view.take_u64("experiment.trials");
  const std::string set_text = view.take_required("experiment.set");
  view.finish();

  const hrw::EventSet set = hrw::parse_event_set(set_text, spec.map);
  const hrw::RateFunction rate(spec.radius.exponent());
  const double theory = -hrw::inf_rate(rate, set);

  const hrw::TailEstimate est =
      hrw::estimate_set_probability(spec, set, n, trials, common.seed, common.shards);
  emit_estimate(common, spec, est, theory);
  return est.hits == 0 ? kExitDegenerate : kExitOk;
}

int run_bigjump(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::IncrementSpec spec = hrw::increment_spec_from_config(view);
  const std::uint64_t n = view.take_u64("experiment.n");
  const double a = view.take_double("experiment.a");
  const double eps = view.take_double("experiment.eps");
  const std::uint64_t trials = view.take_u64("experiment.trials");
  const hrw::Vec v = hrw::parse_vector(view.take_required("experiment.v"));
  view.finish();

  const hrw::BigJumpDiagnostic diag =
      hrw::big_jump_diagnostic(spec, v, n, a, eps, trials, common.seed, common.shards);
  if (diag.available && diag.exceed_count < 30)
    std::cerr << "warning: only " << diag.exceed_count
              << " exceedances; the conditional frequency is noisy\n";

  if (common.output.format == "csv") {
    std::string out = "n,a,eps,trials,exceed_count,bigjump_count,conditional_freq\n";
    out += std::to_string(n) + "," + hrw::format_double(a) + "," + hrw::format_double(eps) + "," +
           std::to_string(diag.trials) + "," + std::to_string(diag.exceed_count) + "," +
           std::to_string(diag.bigjump_count) + "," + hrw::format_double(diag.conditional_freq) +
           "\n";
    common.output.write(out);
  } else {
    json rec{{"n", n},
             {"a", a},
             {"eps", eps},
             {"trials", diag.trials},
             {"exceed_count", diag.exceed_count},
             {"bigjump_count", diag.bigjump_count},
             {"conditional_freq", diag.available ? json(diag.conditional_freq) : json()}};
    common.output.write(rec.dump() + "\n");
  }
  return diag.available ? kExitOk : kExitDegenerate;
}

int run_rate(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::TailExponent exponent = hrw::tail_exponent_from_config(view);
  std::optional<hrw::EllipsoidMap> map;
  if (auto text = view.take("map.matrix")) map = hrw::EllipsoidMap(hrw::parse_matrix_text(*text));
  const std::optional<std::string> set_text = view.take("experiment.set");
  std::optional<hrw::Vec> x;
  if (auto text = view.take("experiment.x")) x = hrw::parse_vector(*text);
  view.finish();

  if (!set_text && !x)
    throw std::invalid_argument("rate: give a point (--x) or a set (--set) to evaluate");

  const hrw::RateFunction rate(exponent);
  json rec{{"family", hrw::tail_family_name(exponent.family())}, {"alpha", rate.alpha()}};
  std::string text = "alpha              : " + hrw::format_double(rate.alpha()) + "\n";
  if (x) {
    const double value = rate(*x);
    rec["x"] = *x;
    rec["rate"] = value;
    text += "rate at x          : " + hrw::format_double(value) + "\n";
  }
  if (set_text) {
    const hrw::EventSet set = hrw::parse_event_set(*set_text, map);
    const double inf = hrw::inf_rate(rate, set);
    const auto [lower, upper] = hrw::ldp_bounds(rate, set);
    rec["set"] = *set_text;
    rec["inf_rate"] = inf;
    rec["ldp_lower"] = lower;
    rec["ldp_upper"] = upper;
    text += "inf rate over set  : " + hrw::format_double(inf) + "\n";
    text += "ldp bounds         : [" + hrw::format_double(lower) + ", " +
            hrw::format_double(upper) + "]\n";
  }
  common.output.write(common.output.format == "jsonl" ? rec.dump() + "\n" : text);
  return kExitOk;
}

int run_optimize(hrw::ConfigView& view, bool reinsurer_side) {
  const CommonRun common = take_common(view);
  const hrw::Vec diag = hrw::parse_vector(view.take_required("experiment.diag"));
  const hrw::PremiumVector prem(hrw::parse_vector(view.take_required("experiment.premium")));
  const double a = view.take_double("experiment.a", 1.0);
  const double alpha = view.take_double("experiment.beta", 0.5);
  double c = 0.0;
  if (reinsurer_side) c = view.take_double("experiment.c");
  view.finish();

  const hrw::EllipsoidMap a_map = hrw::EllipsoidMap::axis_aligned(diag);
  const hrw::QuotaMatrix q =
      reinsurer_side ? hrw::reinsurer_q(a_map, c) : hrw::ceding_optimal_q(a_map);
  const hrw::StrategyReport report = hrw::improvement_check(q, a_map, a, alpha, prem);

  std::string out = strategy_text(report, a, alpha);
  out += strategy_json(report, a, alpha).dump() + "\n";
  common.output.write(out);
  return kExitOk;
}

int run_check_model(hrw::ConfigView& view) {
  const CommonRun common = take_common(view);
  const hrw::TailExponent exponent = hrw::tail_exponent_from_config(view);

  std::vector<double> grid;
  if (auto text = view.take("experiment.grid")) {
    grid = hrw::parse_vector(*text);
  } else {
    for (int i = 0; i <= 12; ++i) grid.push_back(std::pow(10.0, 0.5 * i));
  }

  const std::size_t d = static_cast<std::size_t>(view.take_u64("direction.d", std::uint64_t{2}));
  const std::string kind = view.take_or("direction.kind", "uniform");
  std::optional<std::string> caps_text = view.take("direction.caps");
  double w0 = view.take_double("direction.w0", 1.0);
  const std::uint64_t samples = view.take_u64("experiment.samples", std::uint64_t{100000});
  view.finish();

  const hrw::AssumptionA1Report report = hrw::check_assumption_a1(exponent, grid);

  // Direction law: construction enforces the structural requirements (unit
  // centers, antipodal pairing, positive base weight); sampling then gives an
  // empirical mean-zero readout.
  bool direction_ok = true;
  std::string direction_error;
  double mean_norm = 0.0;
  try {
    hrw::DirectionDistribution dist =
        kind == "cap_mixture"
            ? hrw::DirectionDistribution::cap_mixture(d, hrw::parse_caps(caps_text.value_or("")),
                                                      w0)
            : hrw::DirectionDistribution::uniform(d);
    hrw::Rng rng(common.seed);
    hrw::Vec mean(d, 0.0);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const hrw::Vec u = dist.sample(rng);
      for (std::size_t k = 0; k < d; ++k) mean[k] += u[k];
    }
    for (double& c : mean) c /= static_cast<double>(samples);
    mean_norm = hrw::norm2(mean);
  } catch (const std::exception& err) {
    direction_ok = false;
    direction_error = err.what();
  }

  json rec{{"family", hrw::tail_family_name(exponent.family())},
           {"nondecreasing", report.nondecreasing.passed},
           {"concave", report.concave.passed},
           {"growth_window", report.growth.passed},
           {"direction_valid", direction_ok},
           {"direction_mean_norm", direction_ok ? json(mean_norm) : json()},
           {"samples", samples}};
  if (!report.nondecreasing.passed) rec["nondecreasing_witness"] = report.nondecreasing.witness_x;
  if (!report.concave.passed) rec["concave_witness"] = report.concave.witness_x;
  if (!report.growth.passed) rec["growth_witness"] = report.growth.witness_x;
  if (!direction_ok) rec["direction_error"] = direction_error;

  std::string text;
  text += std::string("tail nondecreasing : ") + (report.nondecreasing.passed ? "pass" : "FAIL") +
          (report.nondecreasing.passed
               ? ""
               : " at x = " + hrw::format_double(report.nondecreasing.witness_x)) +
          "\n";
  text += std::string("tail concave       : ") + (report.concave.passed ? "pass" : "FAIL") +
          (report.concave.passed ? "" : " at x = " + hrw::format_double(report.concave.witness_x)) +
          "\n";
  text += std::string("growth window      : ") + (report.growth.passed ? "pass" : "FAIL") +
          (report.growth.passed ? "" : " at x = " + hrw::format_double(report.growth.witness_x)) +
          "\n";
  text += std::string("direction law      : ") + (direction_ok ? "pass" : "FAIL") +
          (direction_ok ? ", mean norm " + hrw::format_double(mean_norm) : ", " + direction_error) +
          "\n";

  common.output.write(common.output.format == "jsonl" ? rec.dump() + "\n" : text);
  return (report.pass() && direction_ok) ? kExitOk : kExitDegenerate;
}

void add_override_option(CLI::App* cmd, Overrides& overrides, const std::string& flag,
                         const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&overrides, key](const std::string& value) { overrides.set(key, value); }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heavy-tailed multivariate random walks: simulation, tail asymptotics, and "
               "quota-share optimization"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;
  std::string command;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "flat key-value config file with sections");
    add_override_option(cmd, overrides, "--rng", "rng", "generator name (mt19937_64)");
    add_override_option(cmd, overrides, "--seed", "seed", "master seed");
    add_override_option(cmd, overrides, "--shards", "shards", "parallel shard count");
    add_override_option(cmd, overrides, "--out", "out", "output path (default stdout)");
    add_override_option(cmd, overrides, "--format", "format", "csv or jsonl");
  };
  const auto add_increment = [&](CLI::App* cmd) {
    add_override_option(cmd, overrides, "--family", "radius.family",
                        "weibull | lognormal_type | stretched_exp | piecewise_concave");
    add_override_option(cmd, overrides, "--beta", "radius.beta", "shape in (0,1)");
    add_override_option(cmd, overrides, "--c", "radius.c", "weibull scale");
    add_override_option(cmd, overrides, "--p", "radius.p", "lognormal-type power");
    add_override_option(cmd, overrides, "--l", "radius.l", "stretched-exp level");
    add_override_option(cmd, overrides, "--knots", "radius.knots", "piecewise knots x:h,...");
    add_override_option(cmd, overrides, "--alpha", "radius.alpha", "declared index (piecewise)");
    add_override_option(cmd, overrides, "--d", "direction.d", "dimension");
    add_override_option(cmd, overrides, "--direction", "direction.kind", "uniform | cap_mixture");
    add_override_option(cmd, overrides, "--w0", "direction.w0", "base uniform weight");
    add_override_option(cmd, overrides, "--caps", "direction.caps", "caps cx,cy:angle:weight;...");
    add_override_option(cmd, overrides, "--map", "map.matrix", "ellipsoid matrix, rows ; separated");
  };

  {
    CLI::App* cmd = app.add_subcommand("simulate", "emit random walk paths");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--n", "experiment.n", "steps per path");
    add_override_option(cmd, overrides, "--paths", "experiment.paths", "number of paths");
    add_override_option(cmd, overrides, "--monitor", "experiment.monitor",
                        "unit vector whose increment projections are tracked");
    cmd->callback([&] { command = "simulate"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("estimate", "exceedance probability of |S_n| or <v,S_n>");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--n", "experiment.n", "steps per path");
    add_override_option(cmd, overrides, "--a", "experiment.a", "threshold level");
    add_override_option(cmd, overrides, "--trials", "experiment.trials", "number of paths");
    add_override_option(cmd, overrides, "--functional", "experiment.functional", "norm | proj");
    add_override_option(cmd, overrides, "--v", "experiment.v", "projection direction");
    cmd->callback([&] { command = "estimate"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("set-prob", "probability that S_n/n lands in a tail set");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--n", "experiment.n", "steps per path");
    add_override_option(cmd, overrides, "--trials", "experiment.trials", "number of paths");
    add_override_option(cmd, overrides, "--set", "experiment.set",
                        "ball:a | cone:a:center:angle... | half:v:a | mapped:<inner>");
    cmd->callback([&] { command = "set-prob"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("bigjump", "single-big-jump share among exceedances");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--n", "experiment.n", "steps per path");
    add_override_option(cmd, overrides, "--a", "experiment.a", "threshold level");
    add_override_option(cmd, overrides, "--eps", "experiment.eps", "jump slack in (0,1]");
    add_override_option(cmd, overrides, "--trials", "experiment.trials", "number of paths");
    add_override_option(cmd, overrides, "--v", "experiment.v", "projection direction");
    cmd->callback([&] { command = "bigjump"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("rate", "rate function values and set infima");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--x", "experiment.x", "point to evaluate");
    add_override_option(cmd, overrides, "--set", "experiment.set", "set for the infimum");
    cmd->callback([&] { command = "rate"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("optimize-ceding", "ceding-side quota-share optimum");
    add_common(cmd);
    add_override_option(cmd, overrides, "--diag", "experiment.diag", "ellipsoid diagonal, e.g. 1,2,6");
    add_override_option(cmd, overrides, "--premium", "experiment.premium", "premium rates");
    add_override_option(cmd, overrides, "--a", "experiment.a", "level (default 1)");
    add_override_option(cmd, overrides, "--beta", "experiment.beta", "tail index in (0,1), default 0.5");
    cmd->callback([&] { command = "optimize-ceding"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("optimize-reinsurer", "reinsurer-side quota share");
    add_common(cmd);
    add_override_option(cmd, overrides, "--diag", "experiment.diag", "ellipsoid diagonal");
    add_override_option(cmd, overrides, "--premium", "experiment.premium", "premium rates");
    add_override_option(cmd, overrides, "--c", "experiment.c", "risk level c > max_j 1/a_j");
    add_override_option(cmd, overrides, "--a", "experiment.a", "level (default 1)");
    add_override_option(cmd, overrides, "--beta", "experiment.beta", "tail index in (0,1), default 0.5");
    cmd->callback([&] { command = "optimize-reinsurer"; });
  }
  {
    CLI::App* cmd = app.add_subcommand("check-model", "numeric shape checks of the model assumptions");
    add_common(cmd);
    add_increment(cmd);
    add_override_option(cmd, overrides, "--grid", "experiment.grid",
                        "check grid (default half-decades 1..1e6)");
    add_override_option(cmd, overrides, "--samples", "experiment.samples",
                        "direction samples (default 1e5)");
    cmd->callback([&] { command = "check-model"; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    hrw::ConfigView view = make_view(config_path, overrides);
    if (command == "simulate") return run_simulate(view);
    if (command == "estimate") return run_estimate(view);
    if (command == "set-prob") return run_set_prob(view);
    if (command == "bigjump") return run_bigjump(view);
    if (command == "rate") return run_rate(view);
    if (command == "optimize-ceding") return run_optimize(view, false);
    if (command == "optimize-reinsurer") return run_optimize(view, true);
    if (command == "check-model") return run_check_model(view);
    std::cerr << "error: no command\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalid;
  }
}
