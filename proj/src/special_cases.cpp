#include "pvi/special_cases.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "pvi/series.hpp"
#include "pvi/specfun.hpp"

namespace pvi {

namespace {

const double ln2 = std::log(2.0);

double qc_nu() { return 2.0 * std::log(golden) / pi; }

cplx mod_pi(cplx d) { return d - std::floor(d.real() / pi) * pi; }

}  // namespace

cplx qc_d_closed(double sign) {
  double nu = qc_nu();
  double G2 = golden * golden, G4 = G2 * G2;
  cplx L = std::log(cplx(sign)) + 2.0 * std::log(pi) + 2.0 * std::log(G4 + 1.0) - 2.0 * std::log(G2 + 1.0) +
           16.0 * I * nu * ln2 + 2.0 * std::log(1.0 - 2.0 * I * nu) + 2.0 * std::log(nu) -
           2.0 * std::log(1.0 + 2.0 * I * nu) + 4.0 * ln_gamma(1.0 - 2.0 * I * nu) - 8.0 * ln_gamma(1.0 - I * nu);
  return mod_pi(0.5 * I * L);
}

double arccos_series(double nu, int terms) {
  if (!(std::abs(nu) < 0.5)) throw Error(ErrorKind::domain, "arccos series needs |nu| < 1/2");
  double s = 0.0, t = 2.0 * nu, t2 = t * t;
  for (int n = 0; n < terms; ++n, t *= -t2) s += t / (2 * n + 1);
  return 2.0 * s;
}

cplx qc_d_series(double nu, int terms) {
  if (!(std::abs(nu) < 0.5)) throw Error(ErrorKind::domain, "QC d-series needs |nu| < 1/2");
  double s = 0.5 * pi - 8.0 * nu * ln2 + arccos_series(nu);
  double nu2 = nu * nu, pw = nu, four = 1.0;
  for (int n = 1; n < terms; ++n) {
    pw *= nu2;
    four *= 4.0;
    double term = 4.0 * (n % 2 ? -1.0 : 1.0) * (1.0 - four) * zeta_odd(2 * n + 1) / (2 * n + 1) * pw;
    s += term;
    if (std::abs(term) < 1e-18) break;
  }
  return mod_pi(cplx(s, 0.5 * pi * nu));
}

QCParameters qc_parameters(int series_terms) {
  QCParameters q;
  q.params.mu = -1.0;
  q.params.nu = qc_nu();
  q.d_closed = qc_d_closed(-1.0);
  q.d_plus_variant = qc_d_closed(1.0);
  q.d_series = qc_d_series(q.params.nu, series_terms);
  q.minus_sign_matches = std::abs(q.d_closed - q.d_series) < 1e-9;
  q.params.d = q.d_closed;
  return q;
}

cplx qc_zeros(int j, int k) {
  if (j != 1 && j != 2) throw Error(ErrorKind::invalid_argument, "j must be 1 or 2");
  if (k < 0) throw Error(ErrorKind::invalid_argument, "k must be >= 0");
  QCParameters q = qc_parameters();
  double nu = q.params.nu;
  double a = std::abs(std::acos(3.0 / std::sqrt(4.0 * nu * nu + 9.0)));
  return -I * std::exp(-q.params.d.real() / nu - 2.0 * (j - 1) / nu * a) * std::exp(-k * pi / nu);
}

const PoleSolver& qc_solver(int N_max, int order) {
  static std::mutex m;
  static std::map<std::pair<int, int>, std::unique_ptr<PoleSolver>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[{N_max, order}];
  if (!slot) {
    QCParameters q = qc_parameters();
    slot = std::make_unique<PoleSolver>(q.params, coefficient_table(q.params.mu, q.params.nu, order),
                                        N_max);
  }
  return *slot;
}

PolePrediction qc_poles(int k, int j, int N_max, int order) { return qc_solver(N_max, order).predict_pole(j, k); }

double chazy_cubic(double p, double c) {
  return 3.0 * p * p + p * p * p - 12.0 * p * (1.0 + c) + 4.0 * c * c + 16.0 * c + 8.0;
}

ChazyCurvePoint chazy_curve(double nu) {
  const double nu_max = 2.0 * std::log(golden) / pi;
  if (!(nu >= 0.0 && nu <= nu_max * (1.0 + 1e-15)))
    throw Error(ErrorKind::domain, "Chazy curve needs 0 <= nu <= 2 ln G / pi");
  auto e = [&](double k) { return std::exp(k * pi * nu); };
  ChazyCurvePoint c;
  c.nu = nu;
  // Factored forms, u = e^{pi nu}: c1 = 1 - (u-1)^4 (u^2+u+1)/(2u^3),
  // c2 = (u-1)^4 (u^2+1)^2 (G^2-u)(u-G^-2)(u^2+u+1)/u^6. Both vanish to fourth order at
  // nu = 0 and c2 has a simple zero at nu_max, so the differences are formed directly.
  double u = std::exp(pi * nu), um1 = std::expm1(pi * nu), q = u * u + u + 1.0;
  double G2 = golden * golden;
  double top = -G2 * std::expm1(pi * (nu - nu_max));  // G^2 - u
  double bot = u - 1.0 / G2;
  double um14 = um1 * um1 * um1 * um1;
  c.c1 = 1.0 - um14 * q / (2.0 * u * u * u);
  c.c2 = um14 * (u * u + 1.0) * (u * u + 1.0) * top * bot * q / std::pow(u, 6);
  c.cos_pi_theta = -0.5 * e(-3) * (3.0 * e(5) + 4.0 * e(3) + 3.0 * e(1) - e(6) - 3.0 * e(4) - 3.0 * e(2) - 1.0);
  c.cos_pi_theta_i = -0.5 * e(-3) * (3.0 * e(5) + 4.0 * e(3) + 3.0 * e(1) + e(6) + 3.0 * e(4) + 3.0 * e(2) + 1.0);
  // Rounding can leave c2 slightly negative at the endpoints, where it vanishes.
  c.unit = cplx(c.c1, -0.5 * std::sqrt(std::max(c.c2, 0.0)));
  double a = std::arg(c.unit);
  if (a > 0.0) a -= 2.0 * pi;
  c.theta_inf = -1.0 + a / pi;
  c.mu = 0.5 * c.theta_inf;
  return c;
}

cplx chazy_d1() { return cplx(-4.0 * ln2 - 0.5 * pi * std::sqrt(3.0), 0.5 * pi); }

ChazySeries chazy_series(int order) {
  if (order < 1 || order > 8) throw Error(ErrorKind::invalid_argument, "Chazy series order must be in [1, 8]");
  const double s3 = std::sqrt(3.0), p2 = pi * pi, p3 = p2 * pi, p5 = p3 * p2;
  ChazySeries s;
  s.mu.assign(order + 1, 0.0);
  s.d.assign(order + 1, 0.0);
  s.mu[0] = -0.5;
  const double mu_tab[] = {0, 0, -0.5 * pi * s3, 0, -s3 * p3 / 8.0, 0, -17.0 / 240.0 * p5 * s3};
  for (int n = 2; n <= std::min(order, 6); ++n) s.mu[n] = mu_tab[n];
  const cplx d_tab[] = {0.0,
                            chazy_d1(),
                            0.0,
                            0.0,
                            0.0,
                            -(1.5 * zeta_odd(3) + p3 * s3 / 30.0) * p2,
                            0.0,
                            (3.0 * zeta_odd(5) - 0.75 * p2 * zeta_odd(3) - 83.0 * p5 * s3 / 7560.0) * p2};
  for (int n = 1; n <= std::min(order, 7); ++n) s.d[n] = d_tab[n];
  MonodromyData endpoint{-1.0, -2.0, -2.0, -2.0};
  s.d_numeric = d_small_nu_numeric(endpoint, order, SmallNuCurve::chazy);
  if (order == 8) s.d[8] = s.d_numeric[8];
  return s;
}

double chazy_mu2_finite_difference(double h) {
  auto D = [](double t) { return (chazy_curve(t).mu + 0.5) / (t * t); };
  return (4.0 * D(0.5 * h) - D(h)) / 3.0;
}

cplx chazy_d_closed(double nu, cplx theta, ChazyBranch branch, double tol) {
  if (!(nu > 0.0)) throw Error(ErrorKind::domain, "chazy_d_closed needs nu > 0");
  auto e = [&](double k) { return std::exp(k * pi * nu); };
  double target = branch == ChazyBranch::vii
                      ? -0.5 * e(-3) * (3.0 * e(5) + 4.0 * e(3) + 3.0 * e(1) - e(6) - 3.0 * e(4) - 3.0 * e(2) - 1.0)
                      : -0.5 * e(-3) * (3.0 * e(5) + 4.0 * e(3) + 3.0 * e(1) + e(6) + 3.0 * e(4) + 3.0 * e(2) + 1.0);
  cplx c = std::cos(pi * theta);
  if (std::abs(c - target) > tol * (1.0 + std::abs(target)))
    throw Error(ErrorKind::off_curve, "(nu, theta_inf) is not on the requested branch of the curve");
  double g2 = e(1), g4 = g2 * g2;
  double den = branch == ChazyBranch::vii ? g2 + 1.0 : g2 - 1.0;
  cplx L = std::log(4.0) + 2.0 * std::log(g4 + 1.0) - std::log(den * den) +
           2.0 * I * nu * std::log(16.0) + 2.0 * ln_gamma(0.5 * (3.0 - theta) - I * nu) +
           2.0 * ln_gamma(0.5 * (1.0 + theta) - I * nu) - 2.0 * std::log(nu) -
           2.0 * std::log(2.0 * nu + I * (1.0 - theta)) - 4.0 * ln_gamma(cplx(0.0, -nu));
  return mod_pi(0.5 * I * L);
}

cplx log_limit_check(cplx mu, cplx d1, cplx x) {
  if (std::abs(2.0 * mu - 1.0) == 0.0) throw Error(ErrorKind::domain, "P_1 vanishes identically at mu = 1/2");
  if (x == 0.0) throw Error(ErrorKind::domain, "log limit needs x != 0");
  cplx P = poly_eval(log_limit_polynomials(mu, d1, 1), std::log(x));
  if (P == 0.0) throw Error(ErrorKind::pole, "P_1(ln x) = 0");
  return 1.0 / P;
}

cplx log_limit_check_chazy(cplx x) {
  if (x == 0.0) throw Error(ErrorKind::domain, "log limit needs x != 0");
  cplx L = std::log(x), d1 = chazy_d1();
  cplx P = -(L + d1 + 2.0) * (L + d1);
  if (P == 0.0) throw Error(ErrorKind::pole, "P_1(ln x) = 0");
  return 1.0 / P;
}

}  // namespace pvi
