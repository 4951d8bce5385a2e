#include "skqaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "skqaoa/error.hpp"
#include "skqaoa/evaluator.hpp"
#include "skqaoa/parallel.hpp"

namespace skqaoa {

namespace {

struct Simplex {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

double spread_f(const Simplex& s) {
  double m = 0.0;
  for (std::size_t i = 1; i < s.f.size(); ++i) m = std::max(m, std::abs(s.f[i] - s.f[0]));
  return m;
}

double spread_x(const Simplex& s) {
  double m = 0.0;
  for (std::size_t i = 1; i < s.x.size(); ++i)
    for (std::size_t k = 0; k < s.x[0].size(); ++k) m = std::max(m, std::abs(s.x[i][k] - s.x[0][k]));
  return m;
}

NelderMeadResult simplex_run(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step, const NelderMeadOptions& o, int budget) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double chi = 1.0 + 2.0 / dn;
  const double psi = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;

  NelderMeadResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  Simplex s;
  s.x.push_back(x0);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = x0;
    v[k] += step;
    s.x.push_back(std::move(v));
  }
  for (const auto& v : s.x) s.f.push_back(eval(v));

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.f[a] < s.f[b]; });
    Simplex t;
    for (auto i : order) {
      t.x.push_back(std::move(s.x[i]));
      t.f.push_back(s.f[i]);
    }
    s = std::move(t);
  };
  sort_simplex();

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto affine = [&](double t, std::vector<double>& dst) {
    for (std::size_t k = 0; k < n; ++k) dst[k] = centroid[k] + t * (centroid[k] - s.x[n][k]);
  };

  while (out.evals < budget) {
    if (spread_f(s) <= o.ftol && spread_x(s) <= o.xtol) {
      out.converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s.x[i][k] / dn;

    affine(alpha, xr);
    const double fr = eval(xr);
    if (fr < s.f[0]) {
      affine(alpha * chi, xe);
      const double fe = eval(xe);
      if (fe < fr) {
        s.x[n] = xe;
        s.f[n] = fe;
      } else {
        s.x[n] = xr;
        s.f[n] = fr;
      }
    } else if (fr < s.f[n - 1]) {
      s.x[n] = xr;
      s.f[n] = fr;
    } else {
      const bool outside = fr < s.f[n];
      affine(outside ? psi * alpha : -psi, xc);
      const double fc = eval(xc);
      if (fc <= (outside ? fr : s.f[n])) {
        s.x[n] = xc;
        s.f[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k) s.x[i][k] = s.x[0][k] + sigma * (s.x[i][k] - s.x[0][k]);
          s.f[i] = eval(s.x[i]);
        }
      }
    }
    sort_simplex();
  }
  out.x = s.x[0];
  out.value = s.f[0];
  return out;
}

std::vector<double> flatten(const QaoaParams& params) {
  std::vector<double> x = params.gamma;
  x.insert(x.end(), params.beta.begin(), params.beta.end());
  return x;
}

QaoaParams unflatten(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  return {std::vector<double>(x.begin(), x.begin() + p), std::vector<double>(x.begin() + p, x.end())};
}

RestartOutcome local_search(const QaoaParams& start, const NelderMeadOptions& options) {
  auto f = [](const std::vector<double>& x) { return vp_value(unflatten(x)); };
  const auto r = nelder_mead(f, flatten(start), options);
  return {start, canonicalize(unflatten(r.x)), r.value, r.evals, r.converged};
}

QaoaParams random_params(int p, Rng& rng) {
  std::uniform_real_distribution<double> g(-2.0, 2.0);
  std::uniform_real_distribution<double> b(-std::numbers::pi / 4, std::numbers::pi / 4);
  QaoaParams out;
  for (int i = 0; i < p; ++i) out.gamma.push_back(g(rng));
  for (int i = 0; i < p; ++i) out.beta.push_back(b(rng));
  return out;
}

QaoaParams jitter(const QaoaParams& base, double scale, Rng& rng) {
  std::normal_distribution<double> noise(0.0, scale);
  QaoaParams out = base;
  for (auto& v : out.gamma) v += noise(rng);
  for (auto& v : out.beta) v += noise(rng);
  return out;
}

// Restarts run independently; the merge keeps the lowest value and breaks
// ties by restart index, so the result does not depend on thread count.
OptimizationResult run_restarts(int p, const std::vector<QaoaParams>& starts, const NelderMeadOptions& local) {
  const int count = static_cast<int>(starts.size());
  std::vector<RestartOutcome> outcomes(count);
  std::string error;
  ErrorKind error_kind = ErrorKind::invalid_argument;
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (int k = 0; k < count; ++k) {
    try {
      outcomes[k] = local_search(starts[k], local);
    } catch (const Error& e) {
#pragma omp critical(skqaoa_restart_error)
      if (error.empty()) {
        error = e.what();
        error_kind = e.kind();
      }
    }
  }
  if (!error.empty()) fail(error_kind, error);

  OptimizationResult res;
  res.p = p;
  res.starts_used = count;
  for (int k = 0; k < count; ++k) {
    if (outcomes[k].converged) ++res.converged_restarts;
    if (k == 0 || outcomes[k].value < res.best_value) {
      res.best_value = outcomes[k].value;
      res.best_params = outcomes[k].params;
    }
  }
  res.restarts = std::move(outcomes);
  return res;
}

std::vector<QaoaParams> random_starts(int p, int n_starts, Seed seed, const std::optional<QaoaParams>& first) {
  std::vector<QaoaParams> starts;
  for (int k = 0; k < n_starts; ++k) {
    if (k == 0 && first) {
      starts.push_back(*first);
      continue;
    }
    Rng rng = make_rng(derive_seed(seed, SeedStream::restart, static_cast<std::uint64_t>(k)));
    starts.push_back(random_params(p, rng));
  }
  return starts;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  require(!x0.empty(), "nelder_mead needs a non-empty start");
  const int budget = options.max_evals > 0 ? options.max_evals : 1000 * static_cast<int>(x0.size());
  NelderMeadResult total = simplex_run(f, x0, options.initial_step, options, budget);
  // A collapsed simplex can stall away from the minimum; restart around the
  // best point until a fresh simplex no longer improves on it.
  for (int r = 0; r < options.polish_restarts && total.converged && total.evals < budget; ++r) {
    auto again = simplex_run(f, total.x, options.initial_step * 0.1, options, budget - total.evals);
    total.evals += again.evals;
    const bool improved = again.value < total.value - options.ftol;
    if (again.value < total.value) {
      total.x = again.x;
      total.value = again.value;
    }
    total.converged = again.converged;
    if (!improved) break;
  }
  return total;
}

Strategy parse_strategy(std::string_view name) {
  if (name == "multistart") return Strategy::multistart;
  if (name == "warmstart") return Strategy::warmstart;
  fail(ErrorKind::invalid_argument, "unknown strategy '" + std::string(name) + "'");
}

std::string to_string(Strategy strategy) { return strategy == Strategy::multistart ? "multistart" : "warmstart"; }

QaoaParams extrapolate_params(const QaoaParams& prev) {
  prev.validate();
  const int p = prev.depth();
  auto interp = [p](const std::vector<double>& old) {
    std::vector<double> out(p + 1);
    for (int i = 1; i <= p + 1; ++i) {
      const double left = i >= 2 ? old[i - 2] : 0.0;
      const double right = i <= p ? old[i - 1] : 0.0;
      out[i - 1] = (static_cast<double>(i - 1) / p) * left + (static_cast<double>(p - i + 1) / p) * right;
    }
    return out;
  };
  return {interp(prev.gamma), interp(prev.beta)};
}

QaoaParams canonicalize(const QaoaParams& params) {
  params.validate();
  constexpr double period = std::numbers::pi / 2;
  auto wrap = [](double b) {
    double w = b - period * std::floor((b + period / 2) / period);
    if (w >= period / 2) w -= period;
    return w;
  };
  QaoaParams out = params;
  for (auto& b : out.beta) b = wrap(b);
  if (out.gamma[0] < 0.0) {
    out = out.negated();
    for (auto& b : out.beta) b = wrap(b);
  }
  return out;
}

std::vector<double> vp_gradient(const QaoaParams& params, double h) {
  auto x = flatten(params);
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto up = x, down = x;
    up[k] += h;
    down[k] -= h;
    g[k] = (vp_value(unflatten(up)) - vp_value(unflatten(down))) / (2.0 * h);
  }
  return g;
}

OptimizationResult optimize_vp(int p, int n_starts, Seed seed, Strategy strategy, const OptimizeOptions& options) {
  check_depth(p);
  require(p <= options.max_depth, "depth " + std::to_string(p) + " exceeds the optimization cap of " +
                                      std::to_string(options.max_depth));
  require(n_starts >= 1, "optimize needs at least one start");
  if (options.initial) {
    options.initial->validate();
    require(options.initial->depth() == p, "initial parameters must have depth p");
  }

  OptimizationResult res;
  if (strategy == Strategy::multistart) {
    res = run_restarts(p, random_starts(p, n_starts, seed, options.initial), options.local);
  } else {
    QaoaParams prev;
    int depth = 1;
    if (options.warm_from) {
      options.warm_from->validate();
      require(options.warm_from->depth() == p - 1, "warm start parameters must have depth p-1");
      prev = *options.warm_from;
      depth = p;
    } else {
      res = run_restarts(1, random_starts(1, n_starts, seed, std::nullopt), options.local);
      prev = res.best_params;
      depth = 2;
    }
    for (; depth <= p; ++depth) {
      const QaoaParams guess = extrapolate_params(prev);
      std::vector<QaoaParams> starts{guess};
      for (int k = 1; k < n_starts; ++k) {
        Rng rng = make_rng(derive_seed(seed, SeedStream::restart, static_cast<std::uint64_t>(depth) << 32 | k));
        starts.push_back(jitter(guess, options.warm_jitter, rng));
      }
      res = run_restarts(depth, starts, options.local);
      prev = res.best_params;
    }
  }
  res.strategy = strategy;
  res.seed = seed;
  return res;
}

}  // namespace skqaoa
