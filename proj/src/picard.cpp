#include "pvi/picard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pvi/specfun.hpp"

namespace pvi {

namespace {

const double ln16 = 4.0 * std::log(2.0);

// F, F', F1, F1' by their power series, |x| < 1.
struct HypJet {
  cplx F, dF, F1, dF1;
};

HypJet hyp_jet(cplx x) {
  if (std::abs(x) >= 1.0) throw Error(ErrorKind::divergence, "hypergeometric series needs |x| < 1");
  HypJet j{1.0, 0.0, -ln16, 0.0};
  double bracket = -ln16, c = 1.0;
  cplx xn1 = 1.0;  // x^(n-1)
  for (int n = 1; n < 5000000; ++n) {
    bracket += 2.0 * (1.0 / (n - 0.5) - 1.0 / n);
    c *= (n - 0.5) / n;
    double c2 = c * c;
    j.dF += double(n) * c2 * xn1;
    j.dF1 += double(n) * c2 * bracket * xn1;
    cplx xn = xn1 * x;
    j.F += c2 * xn;
    j.F1 += c2 * bracket * xn;
    xn1 = xn;
    if (n * c2 * std::abs(xn1) < 1e-18 * (1.0 + std::abs(j.F1))) return j;
  }
  throw Error(ErrorKind::divergence, "hypergeometric jet did not converge");
}

// wp(z) = P2 [1/s^2 + R] after the shift, with s = sin(pi v).
struct WpCore {
  cplx s;
  cplx R;
};

WpCore wp_core(cplx v, cplx tau) {
  if (!(tau.imag() > 0.0)) throw Error(ErrorKind::no_valid_shift, "Im tau <= 0");
  double shift = std::round(-v.imag() / tau.imag());
  if (std::abs(shift) > 64.0) throw Error(ErrorKind::no_valid_shift, "needs |N| > 64");
  v += shift * tau;
  v -= std::round(v.real());
  cplx q = std::exp(2.0 * pi * I * tau);
  cplx a = std::exp(2.0 * pi * I * (tau + v));
  cplx b = std::exp(2.0 * pi * I * (tau - v));
  double rho = std::max({std::abs(q), std::abs(a), std::abs(b)});
  if (!(rho < 1.0)) throw Error(ErrorKind::no_valid_shift, "Fourier series outside its domain");
  cplx S = 0.0, qn = 1.0, an = 1.0, bn = 1.0;
  double rn = 1.0;
  for (int n = 1; n < 100000; ++n) {
    qn *= q;
    an *= a;
    bn *= b;
    rn *= rho;
    S += double(n) * (qn - 0.5 * (an + bn)) / (1.0 - qn);
    if (n * rn < 1e-17 * std::max(1.0, std::abs(S))) break;
  }
  return {std::sin(pi * v), -1.0 / 3.0 + 8.0 * S};
}

struct PicardCore {
  cplx P2;  // (pi / 2 w1)^2
  WpCore w;
  cplx x;
};

PicardCore picard_core(const PicardParams& p, cplx logx) {
  cplx x = std::exp(logx);
  if (!(std::abs(x) < 1.0)) throw Error(ErrorKind::domain, "Picard solution needs |x| < 1");
  cplx F = hyp_F(x), F1 = hyp_F1(x);
  cplx tau = -I / pi * (logx + F1 / F);
  cplx v = 0.5 * p.nu1 + 0.5 * p.nu2 * tau;
  return {1.0 / (F * F), wp_core(v, tau), x};
}

}  // namespace

HalfPeriods half_periods_log(cplx logx) {
  cplx x = std::exp(logx);
  if (!(std::abs(x) < 1.0) || !finite(logx)) throw Error(ErrorKind::domain, "half periods need 0 < |x| < 1");
  cplx F = hyp_F(x), F1 = hyp_F1(x);
  return {0.5 * pi * F, -0.5 * I * (F * logx + F1)};
}

HalfPeriods half_periods(cplx x) {
  if (x == 0.0 || !(std::abs(x) < 1.0)) throw Error(ErrorKind::domain, "half periods need 0 < |x| < 1");
  if (x.imag() == 0.0 && x.real() < 0.0) throw Error(ErrorKind::domain, "half periods: |arg x| < pi");
  return half_periods_log(std::log(x));
}

cplx omega2_complementary(cplx x) { return I * elliptic_K(1.0 - x); }

cplx wp(cplx z, cplx omega1, cplx omega2) {
  cplx tau = omega2 / omega1;
  if (tau.imag() < 0.0) tau = -tau;
  cplx v = z / (2.0 * omega1);
  WpCore c = wp_core(v, tau);
  if (std::abs(c.s) < 1e-300) throw Error(ErrorKind::pole, "wp at a lattice point");
  cplx P = pi / (2.0 * omega1);
  return P * P * (1.0 / (c.s * c.s) + c.R);
}

cplx picard_solution_log(const PicardParams& p, cplx logx) {
  PicardCore c = picard_core(p, logx);
  if (std::abs(c.w.s) < 1e-300) throw Error(ErrorKind::pole, "Picard solution at a pole");
  return c.P2 * (1.0 / (c.w.s * c.w.s) + c.w.R) + (1.0 + c.x) / 3.0;
}

cplx picard_solution(const PicardParams& p, cplx x) {
  if (x == 0.0) throw Error(ErrorKind::domain, "Picard solution at x = 0");
  if (x.imag() == 0.0 && x.real() < 0.0) throw Error(ErrorKind::branch_cut, "x on the negative real axis");
  return picard_solution_log(p, std::log(x));
}

cplx picard_inverse_log(const PicardParams& p, cplx logx) {
  PicardCore c = picard_core(p, logx);
  cplx s2 = c.w.s * c.w.s;
  return s2 / (c.P2 * (1.0 + s2 * c.w.R) + s2 * (1.0 + c.x) / 3.0);
}

cplx spiral_log(const PicardParams& p, int N, int k) {
  cplx c = p.nu2 + 2.0 * N;
  if (std::abs(c) == 0.0) throw Error(ErrorKind::invalid_argument, "nu2 + 2N = 0: no spiral for this N");
  return ln16 + I * pi * (2.0 * k - p.nu1) / c;
}

cplx spiral_points(const PicardParams& p, int N, int k) { return std::exp(spiral_log(p, N, k)); }

int sheet_of(cplx logx) { return int(std::floor((logx.imag() + pi) / (2.0 * pi))); }

std::vector<double> pole_generating_series(int order) {
  // F and F1 + 4 ln 2 F have rational coefficients.
  std::vector<double> f(order + 1), h(order + 1), g(order + 1), e(order + 1);
  double c = 1.0, bracket = 0.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      bracket += 2.0 * (1.0 / (n - 0.5) - 1.0 / n);
      c *= (n - 0.5) / n;
    }
    f[n] = c * c;
    h[n] = c * c * bracket;
  }
  for (int n = 0; n <= order; ++n) {
    double s = h[n];
    for (int m = 0; m < n; ++m) s -= g[m] * f[n - m];
    g[n] = s;  // f[0] = 1
  }
  // phi = exp(-g), g[0] = 0.
  e[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    double s = 0.0;
    for (int m = 1; m <= n; ++m) s += m * (-g[m]) * e[n - m];
    e[n] = s / n;
  }
  return e;
}

std::vector<cplx> lagrange_pole_series(int order) {
  if (order < 1 || order > 20) throw Error(ErrorKind::invalid_argument, "order must be in [1, 20]");
  std::vector<double> phi = pole_generating_series(order);
  std::vector<double> xi(order + 1, 0.0);
  xi[1] = 1.0;
  for (int it = 1; it < order; ++it) {
    // next = x * phi(xi), truncated at x^order.
    std::vector<double> comp(order, 0.0), pw(order, 0.0);
    pw[0] = 1.0;
    for (int m = 0; m < order; ++m) {
      for (int n = 0; n < order; ++n) comp[n] += phi[m] * pw[n];
      std::vector<double> nxt(order, 0.0);
      for (int a = 0; a < order; ++a)
        if (pw[a] != 0.0)
          for (int b = 1; a + b < order; ++b) nxt[a + b] += pw[a] * xi[b];
      pw.swap(nxt);
    }
    for (int n = 1; n <= order; ++n) xi[n] = comp[n - 1];
  }
  return {xi.begin(), xi.end()};
}

std::vector<cplx> lagrange_pole_series_direct(int order) {
  if (order < 1 || order > 20) throw Error(ErrorKind::invalid_argument, "order must be in [1, 20]");
  std::vector<double> phi = pole_generating_series(order);
  std::vector<cplx> out(order + 1, 0.0);
  std::vector<double> pw(order, 0.0);
  pw[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    std::vector<double> nxt(order, 0.0);
    for (int a = 0; a < order; ++a)
      for (int b = 0; a + b < order; ++b) nxt[a + b] += pw[a] * phi[b];
    pw.swap(nxt);  // phi^n
    out[n] = pw[n - 1] / n;
  }
  return out;
}

double lagrange_radius(double rho, int samples) {
  double m = 0.0;
  for (int i = 0; i < samples; ++i) {
    cplx a = std::polar(rho, 2.0 * pi * i / samples);
    m = std::max(m, std::abs(std::exp(-hyp_F1(a) / hyp_F(a)) / 16.0));
  }
  return rho / m;
}

PicardPole picard_pole(const PicardParams& p, int N, int k, int order) {
  PicardPole out;
  out.N = N;
  out.k = k;
  out.log_x = spiral_log(p, N, k);
  out.x = std::exp(out.log_x);
  out.sheet = sheet_of(out.log_x);
  static const double r_lagrange = lagrange_radius();
  if (!(std::abs(out.x) < r_lagrange))
    throw Error(ErrorKind::out_of_disk, "x_kN outside the Lagrange radius " + std::to_string(r_lagrange));
  std::vector<cplx> c = lagrange_pole_series(order);
  cplx s = 0.0;
  for (int n = order; n >= 1; --n) s = (s + c[n]) * out.x;
  out.xi_series = s;
  cplx xi = s;
  for (int it = 0; it < 50; ++it) {
    HypJet j = hyp_jet(xi);
    cplx g = j.F1 / j.F, dg = (j.dF1 * j.F - j.F1 * j.dF) / (j.F * j.F);
    cplx phi = std::exp(-g) / 16.0;
    cplx H = xi - out.x * phi;
    cplx dH = 1.0 + out.x * phi * dg;
    cplx step = H / dH;
    xi -= step;
    if (std::abs(step) <= 1e-16 * std::abs(xi)) break;
  }
  out.xi = xi;
  out.log_xi = out.log_x + std::log(xi / out.x);
  out.inverse_abs = std::abs(picard_inverse_log(p, out.log_xi));
  return out;
}

namespace {

// Integer range of k for alpha + beta k (<bound if strict, >= bound otherwise) intersected with [lo, hi].
void restrict_range(double alpha, double beta, double bound, bool upper, double& lo, double& hi) {
  if (beta == 0.0) {
    bool ok = upper ? alpha < bound : alpha >= bound;
    if (!ok) { lo = 1.0; hi = 0.0; }
    return;
  }
  double t = (bound - alpha) / beta;
  bool k_below = (beta > 0.0) == upper;  // condition reads k < t or k > t
  if (k_below) hi = std::min(hi, std::floor(t) + 1.0);
  else lo = std::max(lo, std::ceil(t) - 1.0);
}

}  // namespace

std::vector<LatticeIndex> enumerate_visible(const PicardParams& p, double arg_lo, double arg_hi, double rmax,
                                            double rmin, std::size_t max_points) {
  std::vector<LatticeIndex> out;
  if (!(arg_lo < arg_hi) || !(rmin < rmax)) return out;
  if (!(rmax < 16.0) || !(rmin > 0.0)) throw Error(ErrorKind::invalid_argument, "need 0 < rmin < rmax < 16");
  double V = std::max(std::abs(arg_lo), std::abs(arg_hi));
  double cbound = (pi * std::abs(p.nu1.imag()) + V * std::abs(p.nu2.imag())) / std::log(16.0 / rmax);
  int n_lo = int(std::ceil((-cbound - p.nu2.real()) / 2.0));
  int n_hi = int(std::floor((cbound - p.nu2.real()) / 2.0));
  for (int N = n_lo; N <= n_hi; ++N) {
    cplx c = p.nu2 + 2.0 * N;
    if (std::abs(c) == 0.0) continue;
    cplx b = 2.0 * pi * I / c;
    cplx a0 = ln16 - I * pi * p.nu1 / c;
    double lo = -1e300, hi = 1e300;
    restrict_range(a0.real(), b.real(), std::log(rmax), true, lo, hi);
    restrict_range(a0.real(), b.real(), std::log(rmin), false, lo, hi);
    restrict_range(a0.imag(), b.imag(), arg_hi, true, lo, hi);
    restrict_range(a0.imag(), b.imag(), arg_lo, false, lo, hi);
    if (lo > hi) continue;
    if (hi - lo > double(max_points)) throw Error(ErrorKind::invalid_argument, "visible set too large");
    for (long k = long(lo); k <= long(hi); ++k) {
      cplx L = spiral_log(p, N, int(k));
      double r = L.real();
      if (r < std::log(rmax) && r >= std::log(rmin) && L.imag() >= arg_lo && L.imag() < arg_hi)
        out.push_back({N, int(k)});
    }
    if (out.size() > max_points) throw Error(ErrorKind::invalid_argument, "visible set too large");
  }
  return out;
}

VisibilityBounds visibility_bounds(const PicardParams& p, double N, double arg_lo, double arg_hi, double rmax) {
  cplx c = p.nu2 + 2.0 * N;
  if (std::abs(c) == 0.0) throw Error(ErrorKind::invalid_argument, "nu2 + 2N = 0");
  cplx b = 2.0 * pi * I / c;
  cplx a0 = ln16 - I * pi * p.nu1 / c;
  auto solve = [](double alpha, double beta, double bound) {
    return beta == 0.0 ? std::nan("") : (bound - alpha) / beta;
  };
  return {N, solve(a0.real(), b.real(), std::log(rmax)), solve(a0.imag(), b.imag(), arg_lo),
          solve(a0.imag(), b.imag(), arg_hi)};
}

BranchParams picard_branch_params(const PicardParams& p) {
  if (p.nu2.real() != 0.0 || p.nu2.imag() == 0.0)
    throw Error(ErrorKind::invalid_argument, "series branch needs nu2 = 2 i nu with real nu != 0");
  double nu = 0.5 * p.nu2.imag();
  cplx d = 0.5 * pi * p.nu1 - nu * ln16;
  if (nu < 0.0) {
    nu = -nu;
    d = -d;
  }
  BranchParams bp;
  bp.mu = 0.5;
  bp.nu = nu;
  bp.k_shift = int(std::floor(d.real() / pi));
  bp.d = d - double(bp.k_shift) * pi;
  return bp;
}

std::string picard_csv(const PicardParams& p, const std::vector<LatticeIndex>& idx, bool with_poles) {
  std::string s = "N,k,re(x),im(x),re(xi),im(xi),sheet\n";
  char buf[256];
  for (const auto& ix : idx) {
    cplx L = spiral_log(p, ix.N, ix.k), x = std::exp(L);
    cplx xi{std::nan(""), std::nan("")};
    if (with_poles) {
      try {
        xi = picard_pole(p, ix.N, ix.k).xi;
      } catch (const Error&) {
      }
    }
    std::snprintf(buf, sizeof buf, "%d,%d,%.10g,%.10g,%.10g,%.10g,%d\n", ix.N, ix.k, x.real(), x.imag(), xi.real(),
                  xi.imag(), sheet_of(L));
    s += buf;
  }
  return s;
}

}  // namespace pvi
