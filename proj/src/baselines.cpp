#include "skqaoa/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "skqaoa/error.hpp"
#include "skqaoa/simulator.hpp"

namespace skqaoa {

ScheduleShape parse_schedule_shape(std::string_view name) {
  if (name == "linear") return ScheduleShape::linear;
  if (name == "geometric") return ScheduleShape::geometric;
  fail(ErrorKind::invalid_argument, "unknown schedule shape '" + std::string(name) + "'");
}

std::string to_string(ScheduleShape shape) { return shape == ScheduleShape::linear ? "linear" : "geometric"; }

void AnnealSchedule::validate() const {
  require(std::isfinite(t_start) && std::isfinite(t_end), "temperatures must be finite");
  require(t_start > t_end && t_end >= 0.0, "schedule needs t_start > t_end >= 0");
  require(steps >= 1, "schedule needs at least one step");
  require(shape == ScheduleShape::linear || t_end > 0.0, "geometric schedule needs t_end > 0");
}

double AnnealSchedule::temperature(std::int64_t step) const {
  if (steps <= 1) return t_start;
  const double f = static_cast<double>(step) / static_cast<double>(steps - 1);
  if (shape == ScheduleShape::linear) return t_start + (t_end - t_start) * f;
  return t_start * std::pow(t_end / t_start, f);
}

namespace {

// Spin state with cached local fields h_i = n^{-1/2} sum_j J_ij z_j, so that
// flipping z_i changes C by -2 z_i h_i.
class FieldState {
 public:
  FieldState(const Eigen::MatrixXd& j, std::vector<int> spins)
      : j_(j), n_(static_cast<int>(spins.size())), scale_(1.0 / std::sqrt(static_cast<double>(n_))),
        z_(std::move(spins)), zv_(n_) {
    for (int i = 0; i < n_; ++i) zv_[i] = z_[i];
    h_ = scale_ * (j_ * zv_);
    energy_ = 0.5 * zv_.dot(h_);
  }

  double delta(int i) const { return -2.0 * z_[i] * h_[i]; }

  void flip(int i) {
    energy_ += delta(i);
    h_.noalias() += (-2.0 * z_[i] * scale_) * j_.col(i);
    z_[i] = -z_[i];
    zv_[i] = z_[i];
  }

  double energy() const { return energy_; }
  const std::vector<int>& spins() const { return z_; }
  int size() const { return n_; }

 private:
  const Eigen::MatrixXd& j_;
  int n_;
  double scale_;
  std::vector<int> z_;
  Eigen::VectorXd zv_;
  Eigen::VectorXd h_;
  double energy_ = 0.0;
};

std::vector<int> random_spins(int n, Rng& rng) {
  std::vector<int> z(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : z) s = coin(rng) ? -1 : 1;
  return z;
}

double density(const SKInstance& instance, const std::vector<int>& spins) {
  return instance.cost(spins) / static_cast<double>(instance.n);
}

DescentResult descend(const SKInstance& instance, const Eigen::MatrixXd& j, Seed seed) {
  Rng rng = make_rng(seed);
  FieldState state(j, random_spins(instance.n, rng));
  std::vector<int> order(instance.n);
  std::iota(order.begin(), order.end(), 0);

  DescentResult out;
  out.sweeps = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i : order) {
      if (state.delta(i) < 0.0) {
        state.flip(i);
        ++out.flips;
        improved = true;
      }
    }
    ++out.sweeps;
  }
  out.spins = state.spins();
  out.energy_density = density(instance, out.spins);
  return out;
}

}  // namespace

AnnealResult simulated_annealing(const SKInstance& instance, const AnnealSchedule& schedule, Seed seed) {
  schedule.validate();
  const Eigen::MatrixXd j = instance.dense();
  Rng rng = make_rng(seed);
  FieldState state(j, random_spins(instance.n, rng));
  std::uniform_int_distribution<int> pick(0, instance.n - 1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  AnnealResult out;
  out.spins = state.spins();
  double best = state.energy();
  for (std::int64_t step = 0; step < schedule.steps; ++step) {
    const double t = schedule.temperature(step);
    const int i = pick(rng);
    const double d = state.delta(i);
    bool accept = d <= 0.0;
    if (!accept && t > 0.0) accept = unif(rng) < std::exp(-d / t);
    if (!accept) continue;
    state.flip(i);
    ++out.accepted;
    if (state.energy() < best - 1e-12) {
      best = state.energy();
      out.spins = state.spins();
    }
  }
  out.steps = schedule.steps;
  out.sweeps = static_cast<double>(schedule.steps) / instance.n;
  out.energy_density = density(instance, out.spins);
  out.final_energy_density = density(instance, state.spins());
  return out;
}

DescentResult zero_temp_descent(const SKInstance& instance, Seed seed) {
  const Eigen::MatrixXd j = instance.dense();
  return descend(instance, j, seed);
}

DescentResult zero_temp_descent_best(const SKInstance& instance, int restarts, Seed seed) {
  require(restarts >= 1, "descent needs at least one restart");
  const Eigen::MatrixXd j = instance.dense();
  DescentResult best;
  for (int r = 0; r < restarts; ++r) {
    auto run = descend(instance, j, derive_seed(seed, SeedStream::descent, static_cast<std::uint64_t>(r)));
    if (r == 0 || run.energy_density < best.energy_density) best = std::move(run);
  }
  best.restarts = restarts;
  return best;
}

SpectralResult spectral_round(const SKInstance& instance, Seed seed) {
  require(instance.n >= 2, "spectral rounding needs n >= 2");
  const int n = instance.n;
  const Eigen::MatrixXd j = instance.dense();
  Rng rng = make_rng(derive_seed(seed, SeedStream::spectral, 0));
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_unit = [&] {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
    return Eigen::VectorXd(v / v.norm());
  };

  // Estimate ||J|| by a short power iteration, then shift so that sigma - J is
  // positive semidefinite and its top eigenvector is J's bottom one.
  Eigen::VectorXd v = random_unit();
  double norm_est = 0.0;
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXd w = j * v;
    const double nw = w.norm();
    if (nw == 0.0) break;
    norm_est = std::max(norm_est, nw);
    v = w / nw;
  }
  const double row_bound = j.cwiseAbs().rowwise().sum().maxCoeff();
  double sigma = 1.1 * norm_est;
  if (sigma == 0.0) sigma = row_bound;
  sigma = std::min(sigma, row_bound) + 1e-12;

  v = random_unit();
  double rq = v.dot(sigma * v - j * v);
  SpectralResult out;
  bool converged = false;
  for (int it = 1; it <= kSpectralMaxIterations; ++it) {
    Eigen::VectorXd w = sigma * v - j * v;
    const double nw = w.norm();
    if (!std::isfinite(nw) || nw == 0.0) break;
    v = w / nw;
    const double next = v.dot(sigma * v - j * v);
    out.iterations = it;
    if (std::abs(next - rq) <= kSpectralTolerance * std::max(1.0, std::abs(next))) {
      rq = next;
      converged = true;
      break;
    }
    rq = next;
  }
  if (!converged)
    fail(ErrorKind::eigen_not_converged,
         "power iteration did not converge within " + std::to_string(kSpectralMaxIterations) + " iterations");

  out.eigenvalue = sigma - rq;
  out.eigenvector.assign(v.data(), v.data() + n);
  out.spins.resize(n);
  for (int i = 0; i < n; ++i) out.spins[i] = v[i] >= 0.0 ? 1 : -1;
  out.energy_density = density(instance, out.spins);
  return out;
}

bool is_local_minimum(const SKInstance& instance, const std::vector<int>& spins) {
  const Eigen::MatrixXd j = instance.dense();
  FieldState state(j, spins);
  for (int i = 0; i < instance.n; ++i)
    if (state.delta(i) < -1e-12) return false;
  return true;
}

double exhaustive_minimum(const SKInstance& instance) {
  const auto cost = cost_vector(instance);
  return *std::min_element(cost.begin(), cost.end()) / static_cast<double>(instance.n);
}

}  // namespace skqaoa
