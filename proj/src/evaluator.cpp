#include "skqaoa/evaluator.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "skqaoa/error.hpp"
#include "skqaoa/parallel.hpp"

namespace skqaoa {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

// e^{re + i im}, with e^{-inf} = 0 whatever the phase.
inline cplx exp_parts(double re, double im) {
  if (re == -kInf) return {0.0, 0.0};
  const double mag = std::exp(re);
  return {mag * std::cos(im), mag * std::sin(im)};
}

void check_params(const QaoaParams& params) {
  params.validate();
  check_depth(params.depth());
}

void check_match(Configuration a, const QaoaParams& params) {
  check_params(params);
  require(a.p == params.depth(), "configuration depth does not match parameter depth");
  require(a.code < (ConfigCode{1} << (2 * a.p)), "configuration code exceeds 2p bits");
}

// Q_a from precomputed cos/sin. Layer j pairs bit j-1 with bit 2p-j.
cplx q_from_code(ConfigCode code, int p, const std::vector<double>& c, const std::vector<double>& s) {
  cplx q{1.0, 0.0};
  for (int j = 1; j <= p; ++j) {
    const bool plus_minus_pos = (code >> (j - 1)) & 1u;   // a_j == -1
    const bool plus_minus_neg = (code >> (2 * p - j)) & 1u;  // a_{-j} == -1
    if (!plus_minus_pos && !plus_minus_neg) {
      q *= c[j - 1] * c[j - 1];
    } else if (plus_minus_pos && plus_minus_neg) {
      q *= s[j - 1] * s[j - 1];
    } else if (plus_minus_pos) {
      q *= cplx{0.0, s[j - 1] * c[j - 1]};
    } else {
      q *= cplx{0.0, -s[j - 1] * c[j - 1]};
    }
  }
  return q;
}

// Parameter-independent data for one depth, built once and shared.
struct Topology {
  int p = 1;
  std::size_t m = 0;  // |D|
  std::vector<ConfigCode> members;
  std::vector<std::uint32_t> sp, sn;    // star(d) split into positive/negative halves
  std::vector<std::uint32_t> bsp, bsn;  // star(bar(d))
  std::vector<ConfigCode> mirror;       // A_{p+1}
  std::vector<std::uint32_t> msp, msn;
};

std::unique_ptr<Topology> build_topology(int p) {
  auto t = std::make_unique<Topology>();
  t->p = p;
  const ConfigCode half = code_ops::mask(p);
  OrderedD d = build_ordered_d(p);
  t->members = std::move(d.members);
  t->m = t->members.size();
  t->sp.resize(t->m);
  t->sn.resize(t->m);
  t->bsp.resize(t->m);
  t->bsn.resize(t->m);
  for (std::size_t j = 0; j < t->m; ++j) {
    const ConfigCode c = t->members[j];
    const ConfigCode s = code_ops::star(c, p);
    const ConfigCode bs = code_ops::star(code_ops::bar(c, p, code_ops::level(c, p)), p);
    t->sp[j] = s & half;
    t->sn[j] = s >> p;
    t->bsp[j] = bs & half;
    t->bsn[j] = bs >> p;
  }
  for (ConfigCode x = 0; x <= half; ++x) {
    ConfigCode neg = 0;  // a_{-j} = a_j: local bit p-j mirrors bit j-1
    for (int j = 1; j <= p; ++j)
      if ((x >> (j - 1)) & 1u) neg |= ConfigCode{1} << (p - j);
    const ConfigCode code = x | (neg << p);
    const ConfigCode s = code_ops::star(code, p);
    t->mirror.push_back(code);
    t->msp.push_back(s & half);
    t->msn.push_back(s >> p);
  }
  return t;
}

const Topology& topology(int p) {
  static std::array<std::unique_ptr<Topology>, kMaxDepth + 1> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = build_topology(p);
  return *slot;
}

// Phi of a star code split into halves: phi_pos[x] - phi_neg[y].
struct PhiTables {
  std::vector<double> pos, neg;

  PhiTables(const std::vector<double>& gamma, int p) : pos(std::size_t{1} << p), neg(std::size_t{1} << p) {
    for (std::size_t x = 0; x < pos.size(); ++x) {
      double a = 0.0, b = 0.0;
      for (int r = 1; r <= p; ++r) {
        a += ((x >> (r - 1)) & 1u) ? -gamma[r - 1] : gamma[r - 1];
        b += ((x >> (p - r)) & 1u) ? -gamma[r - 1] : gamma[r - 1];
      }
      pos[x] = a;
      neg[x] = b;
    }
  }

  double sq(std::uint32_t x, std::uint32_t y) const {
    const double d = pos[x] - neg[y];
    return d * d;
  }
};

// Compact result of the W procedure: W on D (aligned with Topology::members)
// and the real Q on A_{p+1}.
struct CompactW {
  std::vector<cplx> w_d;
  std::vector<double> q_mirror;
};

CompactW run_w_procedure(const QaoaParams& params) {
  const int p = params.depth();
  const Topology& topo = topology(p);
  const std::size_t m = topo.m;
  const PhiTables phi_tab(params.gamma, p);

  std::vector<double> c(p), s(p);
  for (int j = 0; j < p; ++j) {
    c[j] = std::cos(params.beta[j]);
    s[j] = std::sin(params.beta[j]);
  }

  CompactW out;
  out.q_mirror.resize(topo.mirror.size());
  for (std::size_t a = 0; a < topo.mirror.size(); ++a) out.q_mirror[a] = q_from_code(topo.mirror[a], p, c, s).real();

  // log X_d = log Q_d - acc/2. F is invariant under bar, so one evaluation per
  // pair. At large gamma F underflows while R overflows; their product does
  // not, so both stay in the exponent until the end. Q_d = 0 gives -inf.
  std::vector<cplx> log_x(m);
  for (std::size_t j = 0; j < m; ++j) {
    double acc = 0.0;
    for (std::size_t a = 0; a < topo.mirror.size(); ++a)
      acc += out.q_mirror[a] * phi_tab.sq(topo.msp[a] ^ topo.sp[j], topo.msn[a] ^ topo.sn[j]);
    const cplx q = q_from_code(topo.members[j], p, c, s);
    log_x[j] = q == cplx{0.0, 0.0} ? cplx{-kInf, 0.0} : std::log(q) - 0.5 * acc;
  }

  // R_j is kept as its logarithm L_j: each update R_j *= exp(R_s K_{s,j}) is
  // L_j += R_s K_{s,j}. K_{s,j} vanishes for j >= s, and after the sweep L_u
  // equals sum_j R_j K_{j,u}, i.e. log Y_u.
  std::vector<double> l_re(m, 0.0), l_im(m, 0.0);
  const int threads = worker_threads();
  std::atomic<long long> bad_s{-1};
  const std::uint32_t* sp = topo.sp.data();
  const std::uint32_t* sn = topo.sn.data();
  const double* ppos = phi_tab.pos.data();
  const double* pneg = phi_tab.neg.data();
  double* lr = l_re.data();
  double* li = l_im.data();

#pragma omp parallel num_threads(threads) if (m >= 4096)
  {
    for (std::size_t s_idx = m - 1; s_idx >= 1; --s_idx) {
      const cplx z = 0.5 * exp_parts(lr[s_idx] + log_x[s_idx].real(), li[s_idx] + log_x[s_idx].imag());
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        long long expected = -1;
        bad_s.compare_exchange_strong(expected, static_cast<long long>(s_idx));
        break;  // every thread sees the same value and leaves together
      }
      const double zr = z.real(), zi = z.imag();
      const std::uint32_t a_p = sp[s_idx], a_n = sn[s_idx];
      const std::uint32_t b_p = topo.bsp[s_idx], b_n = topo.bsn[s_idx];
#pragma omp for schedule(static)
      for (std::size_t j = 0; j < s_idx; ++j) {
        const double d1 = ppos[a_p ^ sp[j]] - pneg[a_n ^ sn[j]];
        const double d2 = ppos[b_p ^ sp[j]] - pneg[b_n ^ sn[j]];
        const double diff = d2 * d2 - d1 * d1;
        lr[j] += zr * diff;
        li[j] += zi * diff;
      }
    }
  }
  if (bad_s.load() >= 0)
    fail(ErrorKind::non_finite, "non-finite R_s X_s in W procedure at s=" + std::to_string(bad_s.load() + 1));

  out.w_d.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.w_d[j] = exp_parts(l_re[j] + log_x[j].real(), l_im[j] + log_x[j].imag());
    if (!std::isfinite(out.w_d[j].real()) || !std::isfinite(out.w_d[j].imag()))
      fail(ErrorKind::non_finite, "non-finite W at D index " + std::to_string(j + 1));
  }
  return out;
}

inline double sgn_bit(std::uint32_t word, int bit) { return ((word >> bit) & 1u) ? -1.0 : 1.0; }

cplx assemble_vp(const QaoaParams& params, const CompactW& w) {
  const int p = params.depth();
  const Topology& topo = topology(p);
  std::vector<cplx> s_plus(p), s_minus(p);
  for (std::size_t a = 0; a < topo.mirror.size(); ++a) {
    // Mirror-symmetric: u*_r == u*_{-r}, only the sum term survives.
    for (int r = 1; r <= p; ++r) s_plus[r - 1] += 2.0 * sgn_bit(topo.msp[a], r - 1) * w.q_mirror[a];
  }
  for (std::size_t j = 0; j < topo.m; ++j) {
    const cplx wj = w.w_d[j];
    for (int r = 1; r <= p; ++r) {
      const double up = sgn_bit(topo.sp[j], r - 1), un = sgn_bit(topo.sn[j], p - r);
      const double bp = sgn_bit(topo.bsp[j], r - 1), bn = sgn_bit(topo.bsn[j], p - r);
      // W_{bar(d)} = -W_d
      s_plus[r - 1] += wj * ((up + un) - (bp + bn));
      s_minus[r - 1] += wj * ((up - un) - (bp - bn));
    }
  }
  cplx total{0.0, 0.0};
  for (int r = 0; r < p; ++r) total += params.gamma[r] * s_plus[r] * s_minus[r];
  return 0.5 * kI * total;
}

}  // namespace

cplx q_amplitude(Configuration a, const QaoaParams& params) {
  check_match(a, params);
  const int p = a.p;
  cplx q{1.0, 0.0};
  for (int j = 1; j <= p; ++j) {
    // theta(b) = (1 + b) / 2
    const int theta_pos = (1 + a.spin(j)) / 2, theta_neg = (1 + a.spin(-j)) / 2;
    const double b = params.beta[j - 1];
    const int i_power = (1 - theta_pos) - (1 - theta_neg);
    const cplx i_factor = i_power == 0 ? cplx{1.0, 0.0} : (i_power > 0 ? kI : -kI);
    q *= std::pow(std::cos(b), theta_pos + theta_neg) * std::pow(std::sin(b), 2 - theta_pos - theta_neg) * i_factor;
  }
  return q;
}

double phi(Configuration a, const std::vector<double>& gamma) {
  check_depth(a.p);
  require(static_cast<int>(gamma.size()) == a.p, "gamma length does not match configuration depth");
  const Configuration st = star(a);
  double out = 0.0;
  for (int r = 1; r <= a.p; ++r) out += gamma[r - 1] * (st.spin(r) - st.spin(-r));
  return out;
}

cplx f_damping(Configuration b, const QaoaParams& params) {
  check_match(b, params);
  cplx acc{0.0, 0.0};
  for (const Configuration& a : enumerate_configs(b.p)) {
    if (partition_level(a) != b.p + 1) continue;
    const double ph = phi(product(a, b), params.gamma);
    acc += q_amplitude(a, params) * ph * ph;
  }
  return std::exp(-0.5 * acc);
}

cplx x_weight(Configuration b, const QaoaParams& params) { return q_amplitude(b, params) * f_damping(b, params); }

cplx k_coupling(Configuration b, Configuration c, const QaoaParams& params) {
  check_match(b, params);
  check_match(c, params);
  require(partition_level(b) <= b.p && partition_level(c) <= c.p, "K is defined for configurations outside A_{p+1}");
  const double pb = phi(product(bar(b), c), params.gamma);
  const double pc = phi(product(b, c), params.gamma);
  return 0.5 * x_weight(b, params) * (pb * pb - pc * pc);
}

WTable compute_W(const QaoaParams& params) {
  check_params(params);
  const int p = params.depth();
  const Topology& topo = topology(p);
  const CompactW w = run_w_procedure(params);
  WTable out;
  out.p = p;
  out.params = params;
  out.values.assign(std::size_t{1} << (2 * p), cplx{0.0, 0.0});
  for (std::size_t a = 0; a < topo.mirror.size(); ++a) out.values[topo.mirror[a]] = w.q_mirror[a];
  for (std::size_t j = 0; j < topo.m; ++j) {
    const ConfigCode d = topo.members[j];
    out.values[d] = w.w_d[j];
    out.values[code_ops::bar(d, p, code_ops::level(d, p))] = -w.w_d[j];
  }
  return out;
}

EvalReport evaluate_vp(const QaoaParams& params) {
  check_params(params);
  const auto t0 = std::chrono::steady_clock::now();
  const cplx v = assemble_vp(params, run_w_procedure(params));
  const auto t1 = std::chrono::steady_clock::now();

  EvalReport rep;
  rep.p = params.depth();
  rep.params = params;
  rep.v_p = v.real();
  rep.imag_residue = std::abs(v.imag());
  rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  if (!(rep.imag_residue <= kResidueTolerance * std::max(1.0, std::abs(rep.v_p))))
    fail(ErrorKind::residue_violation,
         "imaginary residue " + std::to_string(rep.imag_residue) + " exceeds tolerance for V_p=" + std::to_string(rep.v_p));
  return rep;
}

double vp_value(const QaoaParams& params) { return evaluate_vp(params).v_p; }

double second_moment_infinite(const QaoaParams& params) {
  const double v = vp_value(params);
  return v * v;
}

cplx truncated_series_oracle(Configuration u, Configuration v, const QaoaParams& params, int t_max) {
  check_match(u, params);
  check_match(v, params);
  const int p = params.depth();
  require(p <= 2, "truncated series oracle supports p <= 2 only");
  require(partition_level(u) <= p && partition_level(v) <= p, "series oracle needs u, v outside A_{p+1}");
  require(t_max >= 0, "t_max must be nonnegative");
  if (t_max < 2) return {0.0, 0.0};

  const OrderedD d = build_ordered_d(p);
  const std::size_t m = d.size();
  std::vector<Configuration> dc(m);
  for (std::size_t j = 0; j < m; ++j) dc[j] = {d.members[j], p};

  std::vector<std::vector<cplx>> k(m, std::vector<cplx>(m));
  std::vector<cplx> k_bar(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) k[j][i] = k_coupling(dc[j], dc[i], params);
    k_bar[j] = k_coupling(dc[j], u, params) + k_coupling(dc[j], v, params);
  }

  // Sum over t_1..t_m >= 0 with total <= t_max - 2 of
  // prod_j (sum_{i<j} K_{j,i} t_i + Kbar_j)^{t_j} / t_j!
  std::vector<int> t(m, 0);
  cplx total{0.0, 0.0};
  auto rec = [&](auto&& self, std::size_t j, int remaining, cplx prod) -> void {
    if (j == m) {
      total += prod;
      return;
    }
    cplx base = k_bar[j];
    for (std::size_t i = 0; i < j; ++i) base += k[j][i] * static_cast<double>(t[i]);
    cplx term{1.0, 0.0};  // base^tj / tj!, with 0^0 = 1
    for (int tj = 0; tj <= remaining; ++tj) {
      t[j] = tj;
      self(self, j + 1, remaining - tj, prod * term);
      term *= base / static_cast<double>(tj + 1);
    }
    t[j] = 0;
  };
  rec(rec, 0, t_max - 2, cplx{1.0, 0.0});
  return x_weight(u, params) * x_weight(v, params) * total;
}

}  // namespace skqaoa
