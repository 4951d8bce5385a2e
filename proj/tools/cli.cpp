#include "cli.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skqaoa/baselines.hpp"
#include "skqaoa/closed_forms.hpp"
#include "skqaoa/error.hpp"
#include "skqaoa/evaluator.hpp"
#include "skqaoa/fixtures.hpp"
#include "skqaoa/optimizer.hpp"
#include "skqaoa/parallel.hpp"
#include "skqaoa/simulator.hpp"

namespace skqaoa::cli {

using json = nlohmann::ordered_json;

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return kBadInput;
    case ErrorKind::residue_violation: return kResidue;
    case ErrorKind::not_converged: return kNotConverged;
    case ErrorKind::memory_cap: return kMemoryCap;
    case ErrorKind::eigen_not_converged: return kEigenNotConverged;
    case ErrorKind::non_finite: return kNonFinite;
  }
  return kInternal;
}

json strip_wall_times(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "wall_seconds") out[it.key()] = strip_wall_times(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(strip_wall_times(v));
    return out;
  }
  return j;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s = "skqaoa";
  for (const auto& a : args) s += " " + a;
  return s;
}

json make_manifest(const std::vector<std::string>& args, std::optional<Seed> seed, double wall, const json& result) {
  json m;
  m["command"] = joined(args);
  m["seed"] = seed ? json(*seed) : json(nullptr);
  m["versions"] = {
      {"skqaoa", SKQAOA_VERSION},
      {"compiler", __VERSION__},
      {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                    std::to_string(EIGEN_MINOR_VERSION)},
      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
      {"cli11", CLI11_VERSION},
  };
  m["threads"] = worker_threads();
  m["wall_seconds"] = wall;
  m["checksum"] = "fnv1a64:" + fnv1a64_hex(strip_wall_times(result).dump());
  return m;
}

json params_json(const QaoaParams& params) { return {{"gamma", params.gamma}, {"beta", params.beta}}; }

struct ParamSource {
  int p = 0;
  std::vector<double> gamma;
  std::vector<double> beta;
  std::string params_file;
  std::string fixture;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "Circuit depth");
    app->add_option("--gamma", gamma, "Cost-layer angles gamma_1..gamma_p");
    app->add_option("--beta", beta, "Mixer angles beta_1..beta_p");
    app->add_option("--params", params_file, "JSON file {\"p\": int, \"gamma\": [...], \"beta\": [...]}");
    app->add_option("--fixture", fixture, "Tabulated angles: table1 (p<=8) or table2 (9<=p<=12)")
        ->check(CLI::IsMember({"table1", "table2"}));
  }

  QaoaParams resolve() const {
    QaoaParams params;
    if (!params_file.empty()) {
      std::ifstream in(params_file);
      require(in.good(), "cannot open params file '" + params_file + "'");
      json j;
      try {
        j = json::parse(in);
        params.gamma = j.at("gamma").get<std::vector<double>>();
        params.beta = j.at("beta").get<std::vector<double>>();
        if (j.contains("p")) require(j.at("p").get<int>() == params.depth(), "params file depth does not match its angle lists");
      } catch (const json::exception& e) {
        fail(ErrorKind::invalid_argument, std::string("malformed params file: ") + e.what());
      }
    } else if (!fixture.empty()) {
      require(p > 0, "--fixture needs --p");
      auto row = find_fixture(fixture, p);
      require(row.has_value(), fixture + " has no row for p = " + std::to_string(p));
      params = row->params;
    } else {
      params.gamma = gamma;
      params.beta = beta;
    }
    params.validate();
    if (p > 0) require(params.depth() == p, "--p does not match the number of angles");
    return params;
  }
};

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void open_csv(std::ofstream& f, const std::string& path) {
  f.open(path);
  require(f.good(), "cannot open CSV output '" + path + "'");
  f << std::setprecision(17);
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

struct Context {
  const std::vector<std::string>& args;
  std::ostream& out;
  std::ostream& err;
};

// eval ------------------------------------------------------------------------

int cmd_eval(const Context& ctx, const ParamSource& src) {
  const auto t0 = Clock::now();
  const QaoaParams params = src.resolve();
  const EvalReport r = evaluate_vp(params);
  json res;
  res["p"] = r.p;
  res["gamma"] = params.gamma;
  res["beta"] = params.beta;
  res["v_p"] = r.v_p;
  res["imag_residue"] = r.imag_residue;
  res["wall_seconds"] = r.wall_seconds;
  res["manifest"] = make_manifest(ctx.args, std::nullopt, seconds_since(t0), res);
  write_json(ctx.out, res);
  return kOk;
}

// optimize --------------------------------------------------------------------

struct OptimizeArgs {
  int p = 0;
  int starts = 0;
  Seed seed = 0;
  std::string strategy = "multistart";
  std::vector<double> start_gamma;
  std::vector<double> start_beta;
  bool warm_fixture = false;
  int max_evals = 0;
  bool allow_large = false;
  double jitter = 0.02;
};

int default_starts(int p) { return p <= 5 ? 1000 : 50; }

int cmd_optimize(const Context& ctx, const OptimizeArgs& a) {
  const auto t0 = Clock::now();
  OptimizeOptions opts;
  if (a.allow_large) opts.max_depth = kMaxDepth;
  opts.local.max_evals = a.max_evals;
  opts.warm_jitter = a.jitter;
  if (!a.start_gamma.empty() || !a.start_beta.empty()) {
    QaoaParams init{a.start_gamma, a.start_beta};
    init.validate();
    opts.initial = init;
  }
  const Strategy strategy = parse_strategy(a.strategy);
  if (a.warm_fixture) {
    require(strategy == Strategy::warmstart, "--warm-fixture needs --strategy warmstart");
    require(a.p >= 2, "--warm-fixture needs p >= 2");
    auto row = find_fixture(a.p - 1);
    require(row.has_value(), "no tabulated angles for p = " + std::to_string(a.p - 1));
    opts.warm_from = row->params;
  }
  const int starts = a.starts > 0 ? a.starts : default_starts(a.p);
  const OptimizationResult r = optimize_vp(a.p, starts, a.seed, strategy, opts);

  json res;
  res["p"] = r.p;
  res["strategy"] = to_string(r.strategy);
  res["seed"] = r.seed;
  res["best_value"] = r.best_value;
  res["best_params"] = params_json(r.best_params);
  res["starts_used"] = r.starts_used;
  res["converged_restarts"] = r.converged_restarts;
  if (auto row = find_fixture("table1", a.p))
    res["table_value"] = row->value;
  else
    res["table_value"] = nullptr;
  json restarts = json::array();
  for (const auto& o : r.restarts)
    restarts.push_back({{"value", o.value}, {"converged", o.converged}, {"evals", o.evals}});
  res["restarts"] = restarts;
  const double wall = seconds_since(t0);
  res["wall_seconds"] = wall;
  res["manifest"] = make_manifest(ctx.args, a.seed, wall, res);
  write_json(ctx.out, res);
  if (r.converged_restarts == 0) {
    ctx.err << "error: no restart converged within the evaluation budget\n";
    return kNotConverged;
  }
  return kOk;
}

// simulate --------------------------------------------------------------------

struct SimulateArgs {
  int n = 0;
  int instances = 30;
  std::string dist = "gaussian";
  Seed seed = 0;
  std::string csv;
};

int cmd_simulate(const Context& ctx, const ParamSource& src, const SimulateArgs& a) {
  const auto t0 = Clock::now();
  check_statevector_size(a.n);
  const QaoaParams params = src.resolve();
  const CouplingDist dist = parse_dist(a.dist);
  const EnsembleStats s = ensemble_stats(a.n, params, a.instances, dist, a.seed);

  if (!a.csv.empty()) {
    std::ofstream f;
    open_csv(f, a.csv);
    f << "instance_index,seed,mean_energy,second_moment,quantum_variance\n";
    for (std::size_t k = 0; k < s.per_instance.size(); ++k) {
      const auto& m = s.per_instance[k];
      f << k << "," << m.seed << "," << m.mean_energy << "," << m.second_moment << "," << m.quantum_variance() << "\n";
    }
  }

  json res;
  res["n"] = a.n;
  res["p"] = params.depth();
  res["gamma"] = params.gamma;
  res["beta"] = params.beta;
  res["dist"] = a.dist;
  res["instances"] = a.instances;
  res["seed"] = a.seed;
  res["mean_energy"] = s.mean_energy;
  res["stderr_energy"] = s.stderr_energy();
  res["var_over_instances"] = s.var_over_instances;
  res["mean_second_moment"] = s.mean_second_moment;
  res["stderr_second_moment"] = s.stderr_second_moment();
  res["mean_quantum_variance"] = s.mean_quantum_variance;
  if (params.depth() == 1 && dist == CouplingDist::gaussian && a.n >= 3) {
    res["closed_form"] = {{"mean_energy", v1_finite_n(params.gamma[0], params.beta[0], a.n)},
                          {"second_moment", m2_p1_finite(params.gamma[0], params.beta[0], a.n)}};
  } else {
    res["closed_form"] = nullptr;
  }
  json rows = json::array();
  for (std::size_t k = 0; k < s.per_instance.size(); ++k) {
    const auto& m = s.per_instance[k];
    rows.push_back({{"instance_index", k},
                    {"seed", m.seed},
                    {"mean_energy", m.mean_energy},
                    {"second_moment", m.second_moment},
                    {"quantum_variance", m.quantum_variance()}});
  }
  res["per_instance"] = rows;
  const double wall = seconds_since(t0);
  res["wall_seconds"] = wall;
  res["manifest"] = make_manifest(ctx.args, a.seed, wall, res);
  write_json(ctx.out, res);
  return kOk;
}

// baseline --------------------------------------------------------------------

struct BaselineArgs {
  std::string algo;
  int n = 0;
  int instances = 10;
  std::string dist = "gaussian";
  Seed seed = 0;
  double t_start = 1.3;
  double t_end = 0.01;
  std::int64_t steps = 2000000;
  std::string schedule = "linear";
  int restarts = 50;
  std::string csv;
};

int cmd_baseline(const Context& ctx, const BaselineArgs& a) {
  const auto t0 = Clock::now();
  const CouplingDist dist = parse_dist(a.dist);
  require(a.n >= 2 && a.n <= kMaxInstanceSpins, "--n must lie in [2, " + std::to_string(kMaxInstanceSpins) + "]");
  require(a.instances >= 1, "--instances must be positive");
  AnnealSchedule schedule{a.t_start, a.t_end, a.steps, parse_schedule_shape(a.schedule)};
  if (a.algo == "sa") schedule.validate();
  if (a.algo == "zerot") require(a.restarts >= 1, "--restarts must be positive");

  std::vector<json> rows(a.instances);
  std::vector<double> energies(a.instances);
  std::string error;
  ErrorKind error_kind = ErrorKind::invalid_argument;
  // Dense couplings at large n are big; keep the footprint bounded.
  const int threads = a.n > 4000 ? 1 : worker_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int k = 0; k < a.instances; ++k) {
    try {
      const auto idx = static_cast<std::uint64_t>(k);
      const Seed inst_seed = derive_seed(a.seed, SeedStream::instance, idx);
      const SKInstance inst = sample_instance(a.n, dist, inst_seed);
      json row = {{"instance_index", k}, {"seed", inst_seed}};
      if (a.algo == "sa") {
        const auto r = simulated_annealing(inst, schedule, derive_seed(a.seed, SeedStream::anneal, idx));
        energies[k] = r.energy_density;
        row["energy_density"] = r.energy_density;
        row["final_energy_density"] = r.final_energy_density;
        row["accepted"] = r.accepted;
        row["sweeps"] = r.sweeps;
      } else if (a.algo == "zerot") {
        const auto r = zero_temp_descent_best(inst, a.restarts, derive_seed(a.seed, SeedStream::descent, idx));
        energies[k] = r.energy_density;
        row["energy_density"] = r.energy_density;
        row["flips"] = r.flips;
        row["restarts"] = r.restarts;
      } else {
        const auto r = spectral_round(inst, derive_seed(a.seed, SeedStream::spectral, idx));
        energies[k] = r.energy_density;
        row["energy_density"] = r.energy_density;
        row["eigenvalue"] = r.eigenvalue;
        row["iterations"] = r.iterations;
      }
      rows[k] = std::move(row);
    } catch (const Error& e) {
#pragma omp critical(skqaoa_cli_baseline_error)
      if (error.empty()) {
        error = e.what();
        error_kind = e.kind();
      }
    }
  }
  if (!error.empty()) fail(error_kind, error);

  if (!a.csv.empty()) {
    std::ofstream f;
    open_csv(f, a.csv);
    f << "instance_index,seed,energy_density\n";
    for (const auto& r : rows)
      f << r["instance_index"].get<int>() << "," << r["seed"].get<Seed>() << "," << r["energy_density"].get<double>()
        << "\n";
  }

  json settings = {{"dist", a.dist}};
  if (a.algo == "sa")
    settings.update({{"t_start", a.t_start}, {"t_end", a.t_end}, {"steps", a.steps}, {"schedule", a.schedule}});
  if (a.algo == "zerot") settings["restarts"] = a.restarts;

  json res;
  res["algo"] = a.algo;
  res["n"] = a.n;
  res["instances"] = a.instances;
  res["seed"] = a.seed;
  res["settings"] = settings;
  res["mean"] = mean_of(energies);
  res["stddev"] = stddev_of(energies);
  res["stderr"] = stddev_of(energies) / std::sqrt(static_cast<double>(energies.size()));
  res["min"] = *std::min_element(energies.begin(), energies.end());
  res["max"] = *std::max_element(energies.begin(), energies.end());
  res["per_instance"] = rows;
  const double wall = seconds_since(t0);
  res["wall_seconds"] = wall;
  res["manifest"] = make_manifest(ctx.args, a.seed, wall, res);
  write_json(ctx.out, res);
  return kOk;
}

// tables ----------------------------------------------------------------------

struct TablesArgs {
  bool allow_large = false;
  int max_p = 0;
  bool text = false;
};

int cmd_tables(const Context& ctx, const TablesArgs& a) {
  const auto t0 = Clock::now();
  const int max_p = a.max_p > 0 ? a.max_p : (a.allow_large ? kMaxDepth : 8);
  require(max_p <= 8 || a.allow_large, "rows beyond p = 8 need --allow-large");

  json rows = json::array();
  auto add = [&](const char* table, const FixtureRow& row) {
    const EvalReport r = evaluate_vp(row.params);
    rows.push_back({{"p", row.p},
                    {"table", table},
                    {"tabulated_value", row.value},
                    {"computed", r.v_p},
                    {"delta", r.v_p - row.value},
                    {"below_two_over_pi", r.v_p < -kTwoOverPi},
                    {"imag_residue", r.imag_residue},
                    {"wall_seconds", r.wall_seconds}});
  };
  for (const auto& row : table1())
    if (row.p <= max_p) add("table1", row);
  for (const auto& row : table2())
    if (row.p <= max_p) add("table2", row);

  json res;
  res["rows"] = rows;
  const double wall = seconds_since(t0);
  res["wall_seconds"] = wall;
  const json manifest = make_manifest(ctx.args, std::nullopt, wall, res);
  if (a.text) {
    ctx.out << " p  table    tabulated  computed     delta\n";
    for (const auto& r : rows) {
      ctx.out << std::setw(2) << r["p"].get<int>() << "  " << r["table"].get<std::string>() << "  " << std::fixed
              << std::setprecision(4) << std::setw(8) << r["tabulated_value"].get<double>() << "  "
              << std::setprecision(8) << std::setw(11) << r["computed"].get<double>() << "  " << std::showpos
              << std::setprecision(2) << std::scientific << r["delta"].get<double>() << std::noshowpos
              << std::defaultfloat << "\n";
    }
    ctx.err << manifest.dump() << "\n";
  } else {
    res["manifest"] = manifest;
    write_json(ctx.out, res);
  }
  return kOk;
}

// sweep -----------------------------------------------------------------------

struct SweepArgs {
  int p = 1;
  std::vector<double> gamma;
  std::vector<double> beta;
  int layer = 1;
  std::vector<double> gamma_range{-1.0, 1.0};
  std::vector<double> beta_range{-std::numbers::pi / 4, std::numbers::pi / 4};
  int gamma_points = 21;
  int beta_points = 21;
  std::string csv;
};

int cmd_sweep(const Context& ctx, const SweepArgs& a) {
  const auto t0 = Clock::now();
  check_depth(a.p);
  QaoaParams base;
  if (a.gamma.empty() && a.beta.empty()) {
    base.gamma.assign(a.p, 0.0);
    base.beta.assign(a.p, 0.0);
  } else {
    base = {a.gamma, a.beta};
  }
  base.validate();
  require(base.depth() == a.p, "--p does not match the number of base angles");
  require(a.layer >= 1 && a.layer <= a.p, "--layer must lie in [1, p]");
  require(a.gamma_points >= 1 && a.beta_points >= 1, "grid needs at least one point per axis");
  require(a.gamma_range.size() == 2 && a.beta_range.size() == 2, "ranges take two values: lo hi");

  auto axis = [](const std::vector<double>& range, int points) {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i)
      v[i] = points == 1 ? range[0] : range[0] + (range[1] - range[0]) * i / static_cast<double>(points - 1);
    return v;
  };
  const auto gs = axis(a.gamma_range, a.gamma_points);
  const auto bs = axis(a.beta_range, a.beta_points);
  const int total = a.gamma_points * a.beta_points;
  std::vector<double> values(total);
  std::string error;
  ErrorKind error_kind = ErrorKind::invalid_argument;
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (int idx = 0; idx < total; ++idx) {
    try {
      QaoaParams q = base;
      q.gamma[a.layer - 1] = gs[idx / a.beta_points];
      q.beta[a.layer - 1] = bs[idx % a.beta_points];
      values[idx] = evaluate_vp(q).v_p;
    } catch (const Error& e) {
#pragma omp critical(skqaoa_cli_sweep_error)
      if (error.empty()) {
        error = e.what();
        error_kind = e.kind();
      }
    }
  }
  if (!error.empty()) fail(error_kind, error);

  std::ostringstream csv;
  csv << std::setprecision(17) << "gamma,beta,v_p\n";
  int best = 0;
  for (int idx = 0; idx < total; ++idx) {
    csv << gs[idx / a.beta_points] << "," << bs[idx % a.beta_points] << "," << values[idx] << "\n";
    if (values[idx] < values[best]) best = idx;
  }

  json res;
  res["p"] = a.p;
  res["layer"] = a.layer;
  res["base"] = params_json(base);
  res["gamma_range"] = a.gamma_range;
  res["beta_range"] = a.beta_range;
  res["gamma_points"] = a.gamma_points;
  res["beta_points"] = a.beta_points;
  res["minimum"] = {{"gamma", gs[best / a.beta_points]}, {"beta", bs[best % a.beta_points]}, {"v_p", values[best]}};
  const double wall = seconds_since(t0);
  res["wall_seconds"] = wall;
  const json manifest = make_manifest(ctx.args, std::nullopt, wall, res);
  if (a.csv.empty()) {
    ctx.out << csv.str();
    ctx.err << manifest.dump() << "\n";
  } else {
    std::ofstream f;
    open_csv(f, a.csv);
    f << csv.str();
    res["csv"] = a.csv;
    res["manifest"] = manifest;
    write_json(ctx.out, res);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infinite-size QAOA energies on the Sherrington-Kirkpatrick model", "skqaoa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SKQAOA_VERSION));
  app.footer(
      "Exit codes: 0 ok, 1 internal error, 2 malformed input, 3 residue violation,\n"
      "4 optimizer not converged, 5 statevector memory cap, 6 eigensolver not converged,\n"
      "7 non-finite intermediate. SKQAOA_THREADS caps worker threads.");

  ParamSource eval_src;
  auto* eval = app.add_subcommand("eval", "Evaluate V_p at given angles");
  eval_src.attach(eval);

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Minimize V_p over the angles");
  optimize->add_option("--p", opt.p, "Circuit depth")->required();
  optimize->add_option("--starts", opt.starts, "Number of starts (default 1000 for p<=5, else 50)");
  optimize->add_option("--seed", opt.seed, "Master seed");
  optimize->add_option("--strategy", opt.strategy)->check(CLI::IsMember({"multistart", "warmstart"}));
  optimize->add_option("--start-gamma", opt.start_gamma, "First multistart point, gamma part");
  optimize->add_option("--start-beta", opt.start_beta, "First multistart point, beta part");
  optimize->add_flag("--warm-fixture", opt.warm_fixture, "Warmstart from the tabulated p-1 angles");
  optimize->add_option("--max-evals", opt.max_evals, "Evaluation budget per start (default 1000 * 2p)");
  optimize->add_option("--jitter", opt.jitter, "Perturbation scale for warm restarts");
  optimize->add_flag("--allow-large", opt.allow_large, "Permit p > 8");

  ParamSource sim_src;
  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Statevector ensemble on random finite-n instances");
  sim_src.attach(simulate);
  simulate->add_option("--n", sim.n, "Number of spins")->required();
  simulate->add_option("--instances", sim.instances);
  simulate->add_option("--dist", sim.dist)->check(CLI::IsMember({"gaussian", "rademacher"}));
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--csv", sim.csv, "Per-instance CSV output path");

  BaselineArgs base;
  auto* baseline = app.add_subcommand("baseline", "Classical heuristics on random instances");
  baseline->add_option("--algo", base.algo)->required()->check(CLI::IsMember({"sa", "zerot", "spectral"}));
  baseline->add_option("--n", base.n)->required();
  baseline->add_option("--instances", base.instances);
  baseline->add_option("--dist", base.dist)->check(CLI::IsMember({"gaussian", "rademacher"}));
  baseline->add_option("--seed", base.seed);
  baseline->add_option("--t-start", base.t_start, "Annealing start temperature");
  baseline->add_option("--t-end", base.t_end, "Annealing end temperature");
  baseline->add_option("--steps", base.steps, "Annealing single-spin proposals");
  baseline->add_option("--schedule", base.schedule)->check(CLI::IsMember({"linear", "geometric"}));
  baseline->add_option("--restarts", base.restarts, "Descents per instance, best kept (zerot)");
  baseline->add_option("--csv", base.csv, "Per-instance CSV output path");

  TablesArgs tab;
  auto* tables = app.add_subcommand("tables", "Evaluate V_p at the tabulated angles");
  tables->add_flag("--allow-large", tab.allow_large, "Include p = 9..12 (long running)");
  tables->add_option("--max-p", tab.max_p, "Highest depth to evaluate");
  tables->add_flag("--text", tab.text, "Human-readable table on stdout, manifest on stderr");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Grid scan of V_p over one layer's (gamma, beta)");
  sweep->add_option("--p", sw.p);
  sweep->add_option("--gamma", sw.gamma, "Base gamma angles");
  sweep->add_option("--beta", sw.beta, "Base beta angles");
  sweep->add_option("--layer", sw.layer, "Layer whose angles are scanned (1-based)");
  sweep->add_option("--gamma-range", sw.gamma_range, "lo hi")->expected(2);
  sweep->add_option("--beta-range", sw.beta_range, "lo hi")->expected(2);
  sweep->add_option("--gamma-points", sw.gamma_points);
  sweep->add_option("--beta-points", sw.beta_points);
  sweep->add_option("--csv", sw.csv, "Write the grid here and print a JSON summary instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const Context ctx{args, out, err};
  try {
    if (eval->parsed()) return cmd_eval(ctx, eval_src);
    if (optimize->parsed()) return cmd_optimize(ctx, opt);
    if (simulate->parsed()) return cmd_simulate(ctx, sim_src, sim);
    if (baseline->parsed()) return cmd_baseline(ctx, base);
    if (tables->parsed()) return cmd_tables(ctx, tab);
    if (sweep->parsed()) return cmd_sweep(ctx, sw);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace skqaoa::cli
