#include "ale/germ.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ale/errors.hpp"

namespace ale {

Cplx poly_eval(const Poly& p, Cplx z) {
  Cplx acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Cplx> monic_roots(const std::vector<Cplx>& c) {
  const int n = int(c.size());
  if (n == 0) return {};
  if (n == 1) return {-c[0]};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw NumericsError("eigensolver failed on companion matrix");
  std::vector<Cplx> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

Cplx monic_discriminant(const std::vector<Cplx>& c) {
  const int n = int(c.size());
  if (n <= 1) return 1.0;
  std::vector<Cplx> p(c);
  p.push_back(1.0);  // full coefficient list, degree n
  std::vector<Cplx> dp(n);
  for (int i = 1; i <= n; ++i) dp[i - 1] = double(i) * p[i];
  const int m = 2 * n - 1;
  Eigen::MatrixXcd syl = Eigen::MatrixXcd::Zero(m, m);
  for (int row = 0; row < n - 1; ++row)
    for (int j = 0; j <= n; ++j) syl(row, row + j) = p[n - j];
  for (int row = 0; row < n; ++row)
    for (int j = 0; j < n; ++j) syl(n - 1 + row, row + j) = dp[n - 1 - j];
  Cplx res = syl.fullPivLu().determinant();
  int exps = (n * (n - 1)) / 2;
  return (exps % 2 == 0) ? res : -res;
}

void CoefficientGerm::validate() const {
  if (k < 1) throw SchemaError("A_k germ needs k >= 1");
  if (int(a.size()) != k) throw SchemaError("A_k germ needs exactly k coefficient polynomials");
  for (const Poly& ai : a)
    if (!ai.empty() && ai[0] != 0.0)
      throw SchemaError("A_k germ coefficients must vanish at z = 0");
  bool all_zero = true;
  for (const Poly& ai : a)
    for (const Cplx& co : ai)
      if (co != 0.0) all_zero = false;
  if (all_zero)
    throw NumericsError("trivial A_k germ: central fiber never smooths");
}

std::vector<Cplx> CoefficientGerm::w_poly_at(Cplx z) const {
  std::vector<Cplx> c(k + 1, Cplx(0));
  for (int i = 0; i < k; ++i) c[i] = poly_eval(a[i], z);
  return c;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Greedy nearest matching of next onto prev; returns next reordered so that
// entry i continues branch i.
std::vector<Cplx> match_roots(const std::vector<Cplx>& prev, std::vector<Cplx> next,
                              double coincide_tol, bool& ambiguous) {
  const int n = int(prev.size());
  struct Cand {
    double d;
    int i, j;
  };
  std::vector<Cand> cands;
  cands.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cands.push_back({std::abs(prev[i] - next[j]), i, j});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d < b.d; });
  std::vector<int> pick(n, -1);
  std::vector<bool> used(n, false);
  double moved = 0;
  int assigned = 0;
  for (const Cand& c : cands) {
    if (assigned == n) break;
    if (pick[c.i] >= 0 || used[c.j]) continue;
    pick[c.i] = c.j;
    used[c.j] = true;
    moved = std::max(moved, c.d);
    ++assigned;
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double gap = std::abs(next[a] - next[b]);
      if (gap > coincide_tol) min_gap = std::min(min_gap, gap);
    }
  if (std::isfinite(min_gap) && moved > 0.4 * min_gap) ambiguous = true;
  std::vector<Cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = next[pick[i]];
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int perm_order(const std::vector<int>& perm) {
  const int n = int(perm.size());
  std::vector<bool> seen(n, false);
  long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    order = std::lcm(order, long(len));
  }
  return int(order);
}

CartanVecC sum_zero_project(std::vector<Cplx> v) {
  Cplx mean = 0;
  for (const Cplx& x : v) mean += x;
  mean /= double(v.size());
  for (Cplx& x : v) x -= mean;
  return v;
}

}  // namespace

LiftedGerm lift_Ak_germ(const CoefficientGerm& g, const LiftOptions& opt) {
  g.validate();
  if (opt.loop_radius <= 0) throw SchemaError("loop radius must be positive");
  if (opt.n_steps < 16) throw SchemaError("need at least 16 continuation steps");
  const int nb = g.k + 1;  // branch count
  const double rho = opt.loop_radius;

  // Pass 1: one loop in z, record branch states and pairwise separations.
  const int ns = opt.n_steps;
  std::vector<std::vector<Cplx>> states(ns + 1);
  states[0] = monic_roots(g.w_poly_at(std::polar(rho, opt.start_angle)));
  double root_scale = 0;
  for (const Cplx& r : states[0]) root_scale = std::max(root_scale, std::abs(r));

  std::vector<std::vector<double>> pair_min(nb, std::vector<double>(nb, 1e300));
  std::vector<std::vector<double>> pair_max(nb, std::vector<double>(nb, 0.0));
  auto record_pairs = [&](const std::vector<Cplx>& st) {
    for (int a = 0; a < nb; ++a)
      for (int b = a + 1; b < nb; ++b) {
        double d = std::abs(st[a] - st[b]);
        pair_min[a][b] = std::min(pair_min[a][b], d);
        pair_max[a][b] = std::max(pair_max[a][b], d);
      }
  };
  record_pairs(states[0]);

  // Provisional coincidence scale; refined after the loop.
  double coincide_tol = std::max(3e-4 * std::max(root_scale, rho), 1e-5);
  bool ambiguous = false;
  for (int m = 1; m <= ns; ++m) {
    Cplx z = std::polar(rho, opt.start_angle + kTwoPi * m / ns);
    states[m] = match_roots(states[m - 1], monic_roots(g.w_poly_at(z)), coincide_tol, ambiguous);
    for (const Cplx& r : states[m]) root_scale = std::max(root_scale, std::abs(r));
    record_pairs(states[m]);
  }
  if (ambiguous)
    throw NumericsError("root tracking ambiguity: increase step count");

  coincide_tol = std::max(3e-4 * std::max(root_scale, rho), 1e-5);
  UnionFind uf(nb);
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b) {
      if (pair_max[a][b] <= coincide_tol) {
        uf.unite(a, b);
      } else if (pair_min[a][b] < coincide_tol) {
        throw RootCollisionError("root collision on the tracking loop", rho * 0.5);
      }
    }
  std::vector<int> cluster_of(nb);
  for (int i = 0; i < nb; ++i) cluster_of[i] = uf.find(i);

  // Monodromy: branch i ends on the initial root sigma(i).
  std::vector<int> sigma(nb, -1);
  {
    std::vector<bool> used(nb, false);
    for (int i = 0; i < nb; ++i) {
      double best = 1e300;
      int pick = -1;
      for (int j = 0; j < nb; ++j) {
        if (used[j]) continue;
        double d = std::abs(states[ns][i] - states[0][j]);
        if (d < best) {
          best = d;
          pick = j;
        }
      }
      sigma[i] = pick;
      used[pick] = true;
    }
  }
  // Quotient by coincident clusters; the permutation must respect them.
  std::vector<int> cluster_ids;
  for (int i = 0; i < nb; ++i)
    if (cluster_of[i] == i) cluster_ids.push_back(i);
  std::vector<int> cluster_index(nb, -1);
  for (std::size_t ci = 0; ci < cluster_ids.size(); ++ci) cluster_index[cluster_ids[ci]] = int(ci);
  std::vector<int> sigma_bar(cluster_ids.size(), -1);
  for (int i = 0; i < nb; ++i) {
    int from = cluster_index[cluster_of[i]];
    int to = cluster_index[cluster_of[sigma[i]]];
    if (sigma_bar[from] >= 0 && sigma_bar[from] != to)
      throw NumericsError("monodromy does not respect coincident clusters");
    sigma_bar[from] = to;
  }
  const int d = perm_order(sigma_bar);

  // Pass 2: sample the root curve on the t-circle, z = t^d.
  const double s = std::pow(rho, 1.0 / d);
  const int M = ns;          // reconstruction samples
  const int sub = d;         // continuation substeps per sample
  const int total = M * sub;
  const double phi0 = opt.start_angle / d;
  std::vector<CartanVecC> samples(M);
  std::vector<Cplx> cur = states[0];
  for (int step = 0; step <= total; ++step) {
    if (step > 0) {
      Cplx t = std::polar(s, phi0 + kTwoPi * step / total);
      Cplx z = std::pow(t, d);
      cur = match_roots(cur, monic_roots(g.w_poly_at(z)), coincide_tol, ambiguous);
    }
    if (step < total && step % sub == 0) {
      // Coincident branches share their cluster mean; symmetric functions of
      // the multiset are far better conditioned than individual members.
      std::vector<Cplx> sym = cur;
      for (int c : cluster_ids) {
        Cplx mean = 0;
        int cnt = 0;
        for (int i = 0; i < nb; ++i)
          if (cluster_of[i] == c) {
            mean += cur[i];
            ++cnt;
          }
        mean /= double(cnt);
        for (int i = 0; i < nb; ++i)
          if (cluster_of[i] == c) sym[i] = mean;
      }
      samples[step / sub] = sum_zero_project(sym);
    }
  }
  if (ambiguous)
    throw NumericsError("root tracking ambiguity: increase step count");
  for (int i = 0; i < nb; ++i) {
    double back = std::abs(cur[i] - states[0][i]);
    if (back > std::max(10 * coincide_tol, 1e-6 * std::max(1.0, root_scale)))
      throw NumericsError("root curve failed to close after one cover loop");
  }

  // The branch curve must be analytic in the full t-disc for the Taylor
  // reconstruction to be valid. A branch point hidden inside the sampling
  // circle leaves negative-frequency content in the samples; detect it and
  // signal a radius retry.
  {
    double bad = 0;
    for (int q : {0, -1, -2}) {
      CartanVecC mom(nb, Cplx(0));
      for (int m = 0; m < M; ++m) {
        Cplx w = std::polar(1.0, -q * (phi0 + kTwoPi * m / M));
        for (int j = 0; j < nb; ++j) mom[j] += samples[m][j] * w;
      }
      for (int j = 0; j < nb; ++j) bad = std::max(bad, std::abs(mom[j]) / M);
    }
    if (bad > 1e-5 * std::max(root_scale, rho))
      throw RootCollisionError("branch point inside the sampling disc", rho * 0.5);
  }

  // Trigonometric moments give the Taylor coefficients in t.
  const int T = std::max(opt.truncation, 2);
  LiftedGerm lg;
  lg.rs = build_root_system(RootKind::A, g.k);
  lg.cover_order = d;
  lg.monodromy = sigma;
  lg.cluster_of = cluster_of;
  lg.loop_radius = rho;
  lg.sample_radius = s;
  lg.series.assign(T + 1, CartanVecC(nb, Cplx(0)));
  for (int q = 1; q <= T; ++q) {
    CartanVecC coeff(nb, Cplx(0));
    for (int m = 0; m < M; ++m) {
      Cplx w = std::polar(1.0, -q * (phi0 + kTwoPi * m / M));
      for (int j = 0; j < nb; ++j) coeff[j] += samples[m][j] * w;
    }
    double denom = double(M) * std::pow(s, q);
    for (int j = 0; j < nb; ++j) coeff[j] /= denom;
    lg.series[q] = coeff;
  }
  return lg;
}

LiftedGerm lift_Ak_germ_auto(const CoefficientGerm& g, LiftOptions opt, int max_retries) {
  for (int attempt = 0;; ++attempt) {
    try {
      return lift_Ak_germ(g, opt);
    } catch (const RootCollisionError& e) {
      if (attempt >= max_retries) throw;
      opt.loop_radius = e.suggested_radius;
    } catch (const NumericsError& e) {
      std::string msg = e.what();
      if (attempt >= max_retries || msg.find("ambiguity") == std::string::npos) throw;
      opt.n_steps *= 2;
    }
  }
}

namespace {

double inf_norm(const CartanVecC& v) {
  double m = 0;
  for (const Cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

double inf_norm(const CartanVec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double l2_norm(const CartanVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double l2_norm(const CartanVecC& v) {
  double s = 0;
  for (const Cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

TangentGraviton tangent_graviton(const LiftedGerm& lg, double tol) {
  const int nc = lg.rs.ambient_dim;
  const int Ts = int(lg.series.size());
  const int Tk = int(lg.kahler_series.size());
  const int T = std::max(Ts, Tk);
  TangentGraviton tg;
  tg.zeta_dot_r.assign(nc, 0.0);
  tg.zeta_dot_c.assign(nc, Cplx(0));
  int p = 0;
  for (int q = 1; q < T; ++q) {
    double mag = 0;
    if (q < Ts) mag = std::max(mag, inf_norm(lg.series[q]));
    if (q < Tk) mag = std::max(mag, inf_norm(lg.kahler_series[q]));
    if (mag > tol) {
      p = q;
      break;
    }
  }
  if (p == 0)
    throw NumericsError("deformation vanishes to truncation order");
  tg.p = p;
  if (p < Ts) tg.zeta_dot_c = lg.series[p];
  if (p < Tk) tg.zeta_dot_r = lg.kahler_series[p];
  tg.epsilon_exponent = 0.5 * p;

  double nr = l2_norm(tg.zeta_dot_r), ncn = l2_norm(tg.zeta_dot_c);
  tg.smooth = true;
  for (const CartanVec& th : lg.rs.positive_roots_d) {
    double nt = l2_norm(th);
    bool real_in = std::abs(dot(th, tg.zeta_dot_r)) <= tol * nt * nr;
    bool cplx_in = std::abs(dot(th, tg.zeta_dot_c)) <= tol * nt * ncn;
    if (real_in && cplx_in) {
      tg.smooth = false;
      break;
    }
  }
  return tg;
}

bool check_nondegenerate_def11(const LiftedGerm& lg, double tol) {
  int pc = 0;
  for (int q = 1; q < int(lg.series.size()); ++q)
    if (inf_norm(lg.series[q]) > tol) {
      pc = q;
      break;
    }
  if (pc != 1) return false;
  return wall_test(lg.rs, lg.series[1], tol).empty();
}

bool check_nondegenerate_def11(const CoefficientGerm& g, const LiftOptions& opt, double tol) {
  return check_nondegenerate_def11(lift_Ak_germ_auto(g, opt), tol);
}

bool check_nondegenerate_def12(const LiftedGerm& lg, int p_bound, double tol) {
  if (p_bound < 0) p_bound = lg.cover_order;
  TangentGraviton tg = tangent_graviton(lg, tol);
  return tg.p <= p_bound && tg.smooth;
}

InvariantDims invariant_parameter_dims(long d, long n) {
  if (d < 1 || n < 1) throw SchemaError("invariant_parameter_dims: need d >= 1, n >= 1");
  return {d, n == 1 ? d : d - 1};
}

CartanVecC evaluate_series(const LiftedGerm& lg, Cplx t) {
  const int nc = lg.rs.ambient_dim;
  CartanVecC acc(nc, Cplx(0));
  for (int q = int(lg.series.size()) - 1; q >= 0; --q) {
    for (int j = 0; j < nc; ++j) acc[j] = acc[j] * t + lg.series[q][j];
  }
  return acc;
}

double lift_round_trip_residual(const CoefficientGerm& g, const LiftedGerm& lg) {
  const int nb = g.k + 1;
  const int T = int(lg.series.size()) - 1;
  const double s = lg.sample_radius;
  using SSeries = std::vector<Cplx>;

  // Elementary symmetric functions of the branch series, truncated at T.
  std::vector<SSeries> e(nb + 1, SSeries(T + 1, Cplx(0)));
  e[0][0] = 1.0;
  for (int j = 0; j < nb; ++j) {
    SSeries r(T + 1, Cplx(0));
    for (int q = 0; q <= T; ++q) r[q] = lg.series[q][j];
    for (int m = std::min(j + 1, nb); m >= 1; --m) {
      SSeries add(T + 1, Cplx(0));
      for (int q1 = 0; q1 <= T; ++q1)
        for (int q2 = 0; q1 + q2 <= T; ++q2) add[q1 + q2] += e[m - 1][q1] * r[q2];
      for (int q = 0; q <= T; ++q) e[m][q] += add[q];
    }
  }

  double worst = 0;
  for (int i = 0; i <= g.k; ++i) {
    // Coefficient of w^i is (-1)^{nb-i} e_{nb-i}; for i = k it must vanish.
    SSeries pred = e[nb - i];
    if ((nb - i) % 2 != 0)
      for (Cplx& x : pred) x = -x;
    SSeries actual(T + 1, Cplx(0));
    if (i < g.k) {
      for (int zdeg = 0; zdeg < int(g.a[i].size()); ++zdeg) {
        long tdeg = long(zdeg) * lg.cover_order;
        if (tdeg <= T) actual[tdeg] = g.a[i][zdeg];
      }
    }
    double acc = 0;
    for (int q = 0; q <= T; ++q) acc += std::abs(pred[q] - actual[q]) * std::pow(s, q);
    worst = std::max(worst, acc);
  }
  return worst;
}

}  // namespace ale
