#include "pvi/poles.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pvi {

namespace {

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * pi);
  if (w <= -pi) w += 2.0 * pi;
  return w;
}

double angular_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Truncated power-series product, both of length L+1.
std::vector<cplx> mul_trunc(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::size_t L = a.size();
  std::vector<cplx> r(L, 0.0);
  for (std::size_t i = 0; i < L; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < L; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

cplx zero_ratio(const BranchParams& p) {
  cplx a = 2.0 * p.mu - 1.0;
  cplx num = a + 2.0 * I * p.nu, den = a - 2.0 * I * p.nu;
  if (std::abs(num) < 1e-14 || std::abs(den) < 1e-14)
    throw Error(ErrorKind::resonance, "2mu - 1 = +-2i nu: second zero family undefined");
  return num / den;
}

ZeroInfo zero_info(const BranchParams& p, int j, int k) {
  if (!(p.nu > 0.0)) throw Error(ErrorKind::domain, "nu must be > 0");
  if (j != 1 && j != 2) throw Error(ErrorKind::invalid_argument, "family j must be 1 or 2");
  ZeroInfo z;
  z.log_x = -p.d / p.nu - double(k) * pi / p.nu;
  z.double_zero = false;
  if (j == 2) {
    cplx r = zero_ratio(p);
    z.log_x += -I * std::log(r) / p.nu;
  }
  z.double_zero = std::abs(2.0 * p.mu - 1.0) < 1e-12;
  z.x = std::exp(z.log_x);
  double im = z.log_x.imag();
  z.braid_loops = int(std::ceil((im - pi) / (2.0 * pi)));
  return z;
}

cplx zeros(const BranchParams& p, int j, int k) { return zero_info(p, j, k).x; }

DerivativeConstants derivative_constants(const CoefficientTable<cplx>& table, const BranchParams& p, int j,
                                         int n_max, int N_max) {
  if (table.order() < n_max)
    throw Error(ErrorKind::invalid_argument, "table order below n_max for derivative constants");
  if (j != 1 && j != 2) throw Error(ErrorKind::invalid_argument, "family j must be 1 or 2");
  cplx r2 = 1.0;
  if (j == 2) {
    cplx r = zero_ratio(p);
    r2 = r * r;
  }
  DerivativeConstants D;
  D.j = j;
  D.Y.assign(n_max + 1, std::vector<cplx>(N_max + 1, 0.0));
  for (int n = 1; n <= n_max; ++n)
    for (int N = 0; N <= N_max; ++N) {
      cplx v = 0.0;
      for (int m = -n; m <= n; ++m) {
        cplx c = table.a(n, m) * std::pow(r2, m);
        for (int l = 0; l < N; ++l) c *= (2.0 * I * double(m) * p.nu - double(l));
        v += c;
      }
      D.Y[n][N] = v;
    }
  return D;
}

std::vector<cplx> delta_coefficients(const DerivativeConstants& Yc, int N_max) {
  const auto& Y = Yc.Y;
  const int L = N_max - 1;
  if (N_max < 2) throw Error(ErrorKind::invalid_argument, "N_max must be >= 2");
  if (int(Y.size()) < N_max + 1 || int(Y[1].size()) < L + 1)
    throw Error(ErrorKind::invalid_argument, "derivative constants too short for N_max");
  const cplx Y11 = Y[1][1], Y20 = Y[2][0];
  const double scale = 1.0 + std::abs(Y20);
  if (std::abs(Y11) < 1e-12 * scale) {
    if (std::abs(Y20) < 1e-12)
      throw Error(ErrorKind::double_zero, "Y11 = Y20 = 0: Picard case, use the elliptic representation");
    throw Error(ErrorKind::double_zero, "Y11 = 0 with Y20 != 0: double zero of y_1");
  }
  std::vector<cplx> D(N_max + 1, 0.0);
  for (int Lc = 1; Lc <= L; ++Lc) {
    // dt = (xi - x)/x = sum_l D[l+1] x^l; D[Lc+1] is unknown (0) here.
    std::vector<cplx> dt(L + 1, 0.0), one_dt(L + 1, 0.0);
    for (int l = 1; l <= L; ++l) dt[l] = D[l + 1];
    one_dt = dt;
    one_dt[0] += 1.0;
    std::vector<cplx> g(L + 1, 0.0);
    for (int n = 1; n <= L + 1; ++n) {
      std::vector<cplx> pw(L + 1, 0.0);
      pw[0] = 1.0;
      for (int e = 0; e < n - 1; ++e) pw = mul_trunc(pw, one_dt);
      std::vector<cplx> inner(L + 1, 0.0), dtp(L + 1, 0.0);
      dtp[0] = 1.0;
      for (int N = 0; N <= L; ++N) {
        cplx c = Y[n][N] / factorial(N);
        for (int i = 0; i <= L; ++i) inner[i] += c * dtp[i];
        dtp = mul_trunc(dtp, dt);
      }
      auto t = mul_trunc(pw, inner);
      for (int i = 0; i + n - 1 <= L; ++i) g[i + n - 1] += t[i];
    }
    D[Lc + 1] = -g[Lc] / Y11;
  }
  return D;
}

std::pair<cplx, cplx> delta_closed_forms(cplx m, double n, int j) {
  const double n2 = n * n, n4 = n2 * n2;
  const cplx m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
  const double den = 1024.0 * (n2 + 1.0) * (n2 + 1.0);
  if (j == 1)
    return {(16.0 * m4 - 8.0 * m2 + 176.0 * n4 + 352.0 * n2 + 177.0) / den,
            -(16.0 * m4 - 8.0 * m2 + 49.0 + 48.0 * n4 + 96.0 * n2) / den};
  return {(16.0 * m4 - 64.0 * m3 + 88.0 * m2 - 48.0 * m + 176.0 * n4 + 352.0 * n2 + 185.0) / den,
          -(16.0 * m4 - 64.0 * m3 + 88.0 * m2 - 48.0 * m + 57.0 + 48.0 * n4 + 96.0 * n2) / den};
}

Threshold consistency_threshold(const BranchParams& p) {
  if (!(p.nu > 0.0)) throw Error(ErrorKind::domain, "nu must be > 0");
  Threshold t;
  const double nu = p.nu;
  t.theta = std::arg(zero_ratio(p));
  const double th = t.theta;
  auto bound = [](double e) { return (1.0 - std::exp(e)) / (1.0 + std::exp(2.0 * e)); };
  if (std::abs(th) < 1e-12 || std::abs(std::abs(th) - pi) < 1e-12) {
    // Coincident rays: only the e^{-pi/nu} ordering is left.
    t.bound1 = t.bound2 = bound(-pi / nu);
  } else if (th <= 0.0) {
    t.bound1 = bound(th / nu);
    t.bound2 = bound(-(pi + th) / nu);
  } else {
    t.bound1 = bound((th - pi) / nu);
    t.bound2 = bound(-th / nu);
  }
  t.min_bound = std::min(t.bound1, t.bound2);
  for (int k = 0; k <= 10000; ++k) {
    double a1 = std::abs(zeros(p, 1, k)), a2 = std::abs(zeros(p, 2, k));
    if (a1 < t.min_bound && a2 < t.min_bound) {
      t.K = k;
      break;
    }
  }
  return t;
}

int first_in_disk(const BranchParams& p, const CoefficientTable<cplx>& table, int j) {
  for (int k = 0; k <= 10000; ++k)
    if (std::abs(zeros(p, j, k)) < 0.5 * table.radius()) return k;
  throw Error(ErrorKind::out_of_disk, "no zero inside the convergence disk");
}

PoleSolver::PoleSolver(BranchParams params, CoefficientTable<cplx> table, int N_max)
    : params_(params), table_(std::move(table)), N_max_(N_max) {
  validate(params_);
  if (N_max_ < 2 || N_max_ > table_.order())
    throw Error(ErrorKind::invalid_argument, "N_max must be in [2, table order]");
  delta1_ = delta_coefficients(derivative_constants(table_, params_, 1, N_max_, N_max_), N_max_);
  delta2_ = delta_coefficients(derivative_constants(table_, params_, 2, N_max_, N_max_), N_max_);
  thr_ = consistency_threshold(params_);
  k01_ = first_in_disk(params_, table_, 1);
  k02_ = first_in_disk(params_, table_, 2);
}

cplx PoleSolver::seed(int j, int k, double* err) const {
  if (thr_.K < 0 || k < thr_.K)
    throw Error(ErrorKind::below_threshold, "k = " + std::to_string(k) + " below consistency threshold K = " +
                                                std::to_string(thr_.K));
  if (k < k0(j))
    throw Error(ErrorKind::out_of_disk, "k = " + std::to_string(k) + " below k0 = " + std::to_string(k0(j)));
  const auto& D = delta(j);
  cplx x = zeros(params_, j, k);
  cplx xi = x, xp = x;
  for (int N = 2; N <= N_max_; ++N) {
    xp *= x;
    xi += D[N] * xp;
  }
  if (err) *err = std::abs(D[N_max_]) * std::pow(std::abs(x), N_max_ + 1);
  return xi;
}

cplx PoleSolver::polish(cplx start, cplx log_ref, double* last_step) const {
  cplx ref = std::exp(log_ref);
  cplx xi = start;
  double step = 0.0;
  for (int it = 0; it < 50; ++it) {
    cplx lx = log_ref + std::log(xi / ref);
    auto jet = branch_jet(table_, params_.d, lx);
    if (jet.dw == 0.0) throw Error(ErrorKind::singular_system, "zero derivative in Newton polish");
    cplx dx = jet.w / jet.dw;
    xi -= dx;
    step = std::abs(dx);
    if (step <= 1e-13 * std::abs(xi)) break;
  }
  if (last_step) *last_step = step;
  return checked(xi, "polish");
}

PolePrediction PoleSolver::predict_pole(int j, int k) const {
  PolePrediction out;
  out.j = j;
  out.k = k;
  ZeroInfo z = zero_info(params_, j, k);
  out.x = z.x;
  out.braid_loops = z.braid_loops;
  out.xi_seed = seed(j, k, &out.seed_err);
  out.xi = polish(out.xi_seed, z.log_x, &out.polish_err);
  return out;
}

PoleSequence pole_sequence(const PoleSolver& s, int j, int k_max) {
  PoleSequence seq;
  seq.j = j;
  seq.delta = s.delta(j);
  seq.k0 = s.k0(j);
  seq.K = s.threshold().K;
  if (seq.K < 0) throw Error(ErrorKind::below_threshold, "no consistency threshold index found");
  for (int k = std::max(seq.K, seq.k0); k <= k_max; ++k) seq.entries.push_back(s.predict_pole(j, k));
  return seq;
}

std::pair<double, double> zero_ray_angles(const BranchParams& p) {
  return {wrap_angle(zero_info(p, 1, 0).log_x.imag()), wrap_angle(zero_info(p, 2, 0).log_x.imag())};
}

ExclusionRegion exclusion_region(const BranchParams& p, const CoefficientTable<cplx>& table, double eps) {
  if (!(eps > 0.0 && eps < pi / 4.0)) throw Error(ErrorKind::invalid_argument, "eps must be in (0, pi/4)");
  ExclusionRegion out;
  const double a2mu = std::abs(2.0 * p.mu - 1.0);
  // mu = 1/2: y_1 = sin^2(nu ln x + d), whose minimum on the sector boundary is sinh^2(nu eps).
  out.C_eps = a2mu < 1e-12 ? p.nu * p.nu * std::tan(eps) * std::tan(eps) : a2mu * std::tan(eps);

  // Numeric minimum of |y_1| on the four sector boundaries; y_1 depends on x only through t.
  const cplx a_m1 = table.a(1, -1), a_0 = table.a(1, 0), a_p1 = table.a(1, 1);
  double cmin = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 2; ++j) {
    double phi0 = zero_info(p, j, 0).log_x.imag();
    for (double s : {-1.0, 1.0}) {
      double phi = phi0 + s * eps;
      const int n = 4096;
      for (int i = 0; i < n; ++i) {
        double lnr = -pi / p.nu * double(i) / n;
        cplx t = std::exp(2.0 * I * p.d + 2.0 * I * p.nu * cplx(lnr, phi));
        cmin = std::min(cmin, std::abs(a_m1 / t + a_0 + a_p1 * t));
      }
    }
  }
  out.C_eps_numeric = cmin;

  // C_f on a 64 x 64 log-radial grid of the disk |x| <= |x_{k0}|, sectors of half-angle eps/2 removed.
  const auto [r1, r2] = zero_ray_angles(p);
  int k1 = first_in_disk(p, table, 1), k2 = first_in_disk(p, table, 2);
  double r0 = std::max(std::abs(zeros(p, 1, k1)), std::abs(zeros(p, 2, k2)));
  out.disk_radius = r0;
  double cf = 0.0;
  for (int i = 0; i < 64; ++i) {
    double rho = r0 * std::exp(-(pi / p.nu) * double(i) / 63.0);
    for (int a = 0; a < 64; ++a) {
      double phi = -pi + 2.0 * pi * (a + 0.5) / 64.0;
      if (angular_distance(phi, r1) < 0.5 * eps || angular_distance(phi, r2) < 0.5 * eps) continue;
      cplx lx(std::log(rho), phi);
      cplx w = branch_jet(table, p.d, lx).w;
      cplx w1 = branch_jet(table, p.d, lx, 1).w;
      cf = std::max(cf, std::abs((w - w1) / std::exp(lx)));
    }
  }
  out.C_f = cf;
  out.R_eps = std::min(out.C_eps / cf, table.radius());
  return out;
}

double exclusion_grid_min(const BranchParams& p, const CoefficientTable<cplx>& table, double R, double eps,
                          int n_r, int n_a) {
  const auto [r1, r2] = zero_ray_angles(p);
  double wmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_r; ++i) {
    double rho = R * std::pow(10.0, -3.0 * double(i) / double(std::max(1, n_r - 1)));
    for (int a = 0; a < n_a; ++a) {
      double phi = -pi + 2.0 * pi * (a + 0.5) / double(n_a);
      if (angular_distance(phi, r1) < eps || angular_distance(phi, r2) < eps) continue;
      cplx w = branch_jet(table, p.d, cplx(std::log(rho), phi)).w;
      wmin = std::min(wmin, std::abs(w));
    }
  }
  return wmin;
}

std::string poles_csv(const std::vector<PoleSequence>& seqs) {
  std::ostringstream os;
  os << "j,k,re(x),im(x),re(xi),im(xi),seed_err,polish_err,disk_radius\n";
  char buf[512];
  for (const auto& s : seqs)
    for (const auto& e : s.entries) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", e.j, e.k, e.x.real(),
                    e.x.imag(), e.xi.real(), e.xi.imag(), e.seed_err, e.polish_err, std::norm(e.x));
      os << buf;
    }
  return os.str();
}

}  // namespace pvi
