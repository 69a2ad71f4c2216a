#include "pvi/monodromy.hpp"

#include <cmath>
#include <string>

#include "pvi/specfun.hpp"

namespace pvi {

namespace {

constexpr double ln2 = std::numbers::ln2;

cplx p_inf_of(cplx theta_inf) { return 2.0 * std::cos(pi * theta_inf); }

double rel_scale(const MonodromyData& d) {
  return 1.0 + std::norm(d.p0x) + std::norm(d.p01) + std::norm(d.px1);
}

// Brings Re d into [0, pi) and returns the shift used.
int normalize(cplx& d) {
  int k = -int(std::floor(d.real() / pi));
  d += double(k) * pi;
  if (d.real() >= pi) {  // rounding at the upper edge
    d -= pi;
    --k;
  }
  if (d.real() < 0.0) d = {0.0, d.imag()};
  return k;
}

// Adds k*pi to `d` so that it lies closest to `ref`.
cplx unwrap_near(cplx d, cplx ref) {
  double k = std::round((ref - d).real() / pi);
  return d + k * pi;
}

// Roots of the cubic as a quadratic in p01 for given p0x, px1, p_inf.
std::pair<cplx, cplx> p01_roots(cplx p0x, cplx px1, cplx pinf) {
  cplx b = p0x * px1 - 2.0 * (2.0 + pinf);
  cplx c = p0x * p0x + px1 * px1 - 2.0 * (p0x + px1) * (2.0 + pinf) + 8.0 + pinf * pinf +
           8.0 * pinf;
  cplx s = std::sqrt(b * b - 4.0 * c);
  return {0.5 * (-b + s), 0.5 * (-b - s)};
}

cplx nearest(std::pair<cplx, cplx> r, cplx ref) {
  return std::abs(r.first - ref) <= std::abs(r.second - ref) ? r.first : r.second;
}

bool is_half_integer(cplx mu, double tol = 1e-12) {
  double h = mu.real() - 0.5;
  return std::abs(mu.imag()) < tol && std::abs(h - std::round(h)) < tol;
}

cplx costeta_chazy(cplx nu) {
  auto e = [&](double k) { return std::exp(k * pi * nu); };
  return -0.5 * e(-3) * (3.0 * e(5) + 4.0 * e(3) + 3.0 * e(1) - e(6) - 3.0 * e(4) - 3.0 * e(2) - 1.0);
}

}  // namespace

cplx cubic_residual(const MonodromyData& m) {
  cplx pinf = p_inf_of(m.theta_inf);
  return m.p0x * m.p0x + m.p01 * m.p01 + m.px1 * m.px1 + m.p0x * m.p01 * m.px1 -
         2.0 * (m.p0x + m.p01 + m.px1) * (2.0 + pinf) + 8.0 + pinf * pinf + 8.0 * pinf;
}

double nu_from_p0x(double p0x) {
  if (!(p0x < -2.0) || !std::isfinite(p0x))
    throw Error(ErrorKind::domain, "p0x must be real and < -2, got " + std::to_string(p0x));
  return std::acosh(-0.5 * p0x) / (2.0 * pi);
}

DClassification classify_degenerate(cplx mu, double nu, double tol) {
  // 2mu = 2i nu + 1 - 2m  <=>  m = (1 + 2i nu - 2mu)/2
  cplx ma = 0.5 * (1.0 + 2.0 * I * nu - 2.0 * mu);
  // 2mu = -2i nu + 2m - 1  <=>  m = (2mu + 2i nu + 1)/2
  cplx mb = 0.5 * (2.0 * mu + 2.0 * I * nu + 1.0);
  auto near_int = [&](cplx z, int& m) {
    m = int(std::lround(z.real()));
    return std::abs(z - double(m)) < tol;
  };
  DClassification out;
  int m = 0;
  if (near_int(ma, m)) {
    if (m == 0) throw Error(ErrorKind::resonance, "2mu - 1 = 2i nu (excluded resonance)");
    out.kind = m >= 1 ? DCase::case1 : DCase::case2;
    out.m = m;
    return out;
  }
  if (near_int(mb, m)) {
    if (m == 1) throw Error(ErrorKind::resonance, "2mu - 1 = -2i nu (excluded resonance)");
    out.kind = m >= 2 ? DCase::case3 : DCase::case4;
    out.m = m;
    return out;
  }
  return out;
}

cplx d_generic_raw(cplx mu, cplx nu, cplx p01, cplx px1) {
  cplx s2 = std::sinh(2.0 * pi * nu);
  cplx e2 = std::exp(2.0 * pi * nu);
  cplx bracket = 0.5 * (e2 * px1 - p01) * s2 + (std::cos(2.0 * pi * mu) + 1.0) * (e2 + 1.0);
  if (bracket == 0.0) throw Error(ErrorKind::domain, "monodromy bracket vanishes; d undefined");
  cplx L = std::log(cplx(-4.0)) + 2.0 * I * nu * std::log(16.0) +
           2.0 * ln_gamma_analytic(1.5 - mu - I * nu) + 2.0 * ln_gamma_analytic(mu + 0.5 - I * nu) -
           2.0 * std::log(2.0 * nu + I * (1.0 - 2.0 * mu)) - 2.0 * std::log(nu) - 2.0 * std::log(s2) -
           4.0 * ln_gamma_analytic(-I * nu) + std::log(bracket);
  return checked(0.5 * I * L, "d_generic_raw");
}

cplx d_degenerate_raw(DCase which, int m, cplx nu, cplx px1) {
  if (px1 == 2.0) throw Error(ErrorKind::domain, "px1 = 2 makes d undefined");
  cplx L;
  switch (which) {
    case DCase::case1:
    case DCase::case3:
      // -(i/2) ln{ nu^2 Gamma(m)^2 Gamma(2i nu + 1 - m)^2 / (16^{2i nu} Gamma(1+i nu)^4) (px1 - 2) }
      L = 2.0 * std::log(nu) + 2.0 * ln_gamma_analytic(cplx(m)) +
          2.0 * ln_gamma_analytic(2.0 * I * nu + 1.0 - double(m)) - 2.0 * I * nu * std::log(16.0) -
          4.0 * ln_gamma_analytic(1.0 + I * nu) + std::log(px1 - 2.0);
      return checked(-0.5 * I * L, "d_degenerate_raw");
    case DCase::case2:
    case DCase::case4:
      // (i/2) ln{ sinh(pi nu)^4 16^{2i nu} Gamma(1-m)^2 Gamma(1+i nu)^4 Gamma(m - 2i nu)^2 /
      //          (nu^2 pi^4) (px1 - 2) }
      L = 4.0 * std::log(std::sinh(pi * nu)) + 2.0 * I * nu * std::log(16.0) +
          2.0 * ln_gamma_analytic(cplx(1.0 - m)) + 4.0 * ln_gamma_analytic(1.0 + I * nu) +
          2.0 * ln_gamma_analytic(double(m) - 2.0 * I * nu) - 2.0 * std::log(nu) -
          4.0 * std::log(pi) + std::log(px1 - 2.0);
      return checked(0.5 * I * L, "d_degenerate_raw");
    case DCase::generic:
      break;
  }
  throw Error(ErrorKind::invalid_argument, "d_degenerate_raw needs a degenerate case");
}

BranchParams d_from_monodromy(const MonodromyData& data, const DOptions& opt) {
  DClassification used;
  return d_from_monodromy(data, used, opt);
}

BranchParams d_from_monodromy(const MonodromyData& data, DClassification& used,
                              const DOptions& opt) {
  if (!finite(data.theta_inf) || !finite(data.p0x) || !finite(data.p01) || !finite(data.px1))
    throw Error(ErrorKind::domain, "non-finite monodromy data");
  if (std::abs(data.p0x.imag()) > 1e-12 * (1.0 + std::abs(data.p0x)))
    throw Error(ErrorKind::domain, "p0x must be real");
  double nu = nu_from_p0x(data.p0x.real());
  cplx mu = 0.5 * data.theta_inf;

  cplx res = cubic_residual(data);
  if (std::abs(res) > opt.cubic_tol * rel_scale(data))
    throw Error(ErrorKind::off_curve,
                "monodromy data off the cubic surface, residual " + std::to_string(std::abs(res)));

  used = classify_degenerate(mu, nu, opt.degenerate_tol);
  cplx d;
  double e2 = std::exp(2.0 * pi * nu);
  switch (used.kind) {
    case DCase::generic:
      d = d_generic_raw(mu, nu, data.p01, data.px1);
      break;
    case DCase::case1:
    case DCase::case3:
    case DCase::case2:
    case DCase::case4: {
      bool plus = used.kind == DCase::case1 || used.kind == DCase::case3;
      cplx lhs = 2.0 - data.p01;
      cplx rhs = (2.0 - data.px1) * (plus ? e2 : 1.0 / e2);
      if (std::abs(lhs - rhs) > opt.compat_tol * (1.0 + std::abs(lhs) + std::abs(rhs)))
        throw Error(ErrorKind::degenerate_mismatch,
                    "p01 and px1 violate the degenerate-case relation, mismatch " +
                        std::to_string(std::abs(lhs - rhs)));
      d = d_degenerate_raw(used.kind, used.m, nu, data.px1);
      break;
    }
  }
  BranchParams out;
  out.mu = mu;
  out.nu = nu;
  out.k_shift = normalize(d);
  out.d = d;
  return out;
}

std::pair<BranchParams, MonodromyData> braid_continuation(const BranchParams& params,
                                                          const MonodromyData& data) {
  cplx ch = -0.5 * data.p0x;  // cosh(2 pi nu)
  cplx c2 = std::cos(2.0 * pi * params.mu);
  MonodromyData nd = data;
  nd.p01 = -data.p01 + 2.0 * data.px1 * ch + 4.0 * c2 + 4.0;
  nd.px1 = data.px1 * (4.0 * ch * ch - 1.0) - 2.0 * ch * data.p01 + 4.0 * (c2 + 1.0) * (2.0 * ch + 1.0);
  BranchParams np = params;
  np.d = params.d + 2.0 * pi * I * params.nu;
  return {np, nd};
}

cplx d1_first_case(cplx mu, cplx p01, cplx px1) {
  cplx c = std::cos(pi * mu);
  if (std::abs(c) < 1e-12) throw Error(ErrorKind::domain, "singular mu = m + 1/2 in the first case");
  return 2.0 * euler_gamma - 4.0 * ln2 + I * pi / 2.0 + 2.0 * digamma(mu + 0.5) - pi * std::tan(pi * mu) +
         I * pi * (px1 - p01) / (8.0 * c * c);
}

namespace {

SmallNuCurve resolve_curve(const MonodromyData& data, SmallNuCurve curve) {
  if (curve != SmallNuCurve::automatic) return curve;
  cplx mu = 0.5 * data.theta_inf;
  if (!is_half_integer(mu)) return SmallNuCurve::first;
  if (std::abs(mu + 0.5) < 1e-12 && std::abs(data.p01 + 2.0) < 1e-12 && std::abs(data.px1 + 2.0) < 1e-12)
    return SmallNuCurve::chazy;
  throw Error(ErrorKind::domain,
              "singular mu = m + 1/2 at nu = 0; choose a degenerate curve explicitly");
}

// m of the degenerate relation from mu(0).
int degenerate_m(SmallNuCurve c, cplx mu0) {
  if (!is_half_integer(mu0))
    throw Error(ErrorKind::domain, "degenerate curves need mu(0) = m + 1/2");
  int m;
  if (c == SmallNuCurve::case1 || c == SmallNuCurve::case2)
    m = int(std::lround(0.5 - mu0.real()));
  else
    m = int(std::lround(mu0.real() + 0.5));
  bool ok = (c == SmallNuCurve::case1 && m >= 1) || (c == SmallNuCurve::case2 && m <= -1) ||
            (c == SmallNuCurve::case3 && m >= 2) || (c == SmallNuCurve::case4 && m <= 0);
  if (!ok) {
    if ((c == SmallNuCurve::case1 || c == SmallNuCurve::case2) && m == 0)
      throw Error(ErrorKind::resonance, "m = 0 is the excluded resonance 2mu - 1 = 2i nu");
    if ((c == SmallNuCurve::case3 || c == SmallNuCurve::case4) && m == 1)
      throw Error(ErrorKind::resonance, "m = 1 is the excluded resonance 2mu - 1 = -2i nu");
    throw Error(ErrorKind::domain, "mu(0) does not match the requested degenerate case");
  }
  return m;
}

DCase to_dcase(SmallNuCurve c) {
  switch (c) {
    case SmallNuCurve::case1: return DCase::case1;
    case SmallNuCurve::case2: return DCase::case2;
    case SmallNuCurve::case3: return DCase::case3;
    case SmallNuCurve::case4: return DCase::case4;
    default: return DCase::generic;
  }
}

// Evaluates d along the curve at the points nu_j; the state tracks the continuously chosen root.
struct CurveWalker {
  SmallNuCurve curve;
  MonodromyData data0;
  int m = 0;
  cplx p01_prev;  // first case
  cplx s_prev;    // chazy: mu = -1/2 - s

  cplx operator()(cplx nu) {
    switch (curve) {
      case SmallNuCurve::first: {
        cplx mu = 0.5 * data0.theta_inf;
        cplx p0x = -2.0 * std::cosh(2.0 * pi * nu);
        p01_prev = nearest(p01_roots(p0x, data0.px1, p_inf_of(data0.theta_inf)), p01_prev);
        return d_generic_raw(mu, nu, p01_prev, data0.px1);
      }
      case SmallNuCurve::chazy: {
        cplx w = costeta_chazy(nu);
        cplx s = std::acos(-w) / (2.0 * pi);
        if (std::abs(-s - s_prev) < std::abs(s - s_prev)) s = -s;
        s_prev = s;
        cplx mu = -0.5 - s;
        cplx p = -2.0 * std::cosh(2.0 * pi * nu);
        return d_generic_raw(mu, nu, p, p);
      }
      default:
        return d_degenerate_raw(to_dcase(curve), m, nu, data0.px1);
    }
  }
};

}  // namespace

std::vector<cplx> d_small_nu_numeric(const MonodromyData& data, int order, SmallNuCurve curve,
                                     double radius, int points) {
  if (order < 0 || order > 12)
    throw Error(ErrorKind::invalid_argument, "d_small_nu order must be in [0, 12]");
  if (!(radius > 0.0 && radius < 0.25) || points < 2 * order + 8)
    throw Error(ErrorKind::invalid_argument, "bad Cauchy circle parameters");
  curve = resolve_curve(data, curve);

  CurveWalker walk;
  walk.curve = curve;
  walk.data0 = data;
  if (curve == SmallNuCurve::first) {
    MonodromyData at0 = data;
    at0.p0x = -2.0;
    if (std::abs(cubic_residual(at0)) > 1e-8 * rel_scale(at0))
      throw Error(ErrorKind::off_curve, "nu -> 0 data must satisfy the cubic at p0x = -2");
    walk.p01_prev = data.p01;
  } else if (curve == SmallNuCurve::chazy) {
    walk.s_prev = 0.0;
  } else {
    walk.m = degenerate_m(curve, 0.5 * data.theta_inf);
  }

  // Walk out along the real axis so the root choices connect to nu = 0, then around the circle.
  cplx prev;
  const int radial = 32;
  for (int j = 1; j <= radial; ++j) {
    double nu = radius * j / radial;
    cplx d = walk(nu);
    prev = j == 1 ? d : unwrap_near(d, prev);
  }
  std::vector<cplx> vals(points);
  for (int j = 0; j < points; ++j) {
    cplx nu = radius * std::exp(2.0 * pi * I * double(j) / double(points));
    cplx d = walk(nu);
    d = unwrap_near(d, prev);
    prev = d;
    vals[j] = d;
  }
  // Closing the loop must reproduce the start; otherwise d is not single-valued on the circle.
  cplx closing = unwrap_near(walk(radius), prev);
  if (std::abs(closing - vals[0]) > 1e-8 * (1.0 + std::abs(vals[0])))
    throw Error(ErrorKind::branch_cut, "d is not single-valued on the Cauchy circle");

  std::vector<cplx> coef(order + 1);
  for (int n = 0; n <= order; ++n) {
    cplx s = 0.0;
    for (int j = 0; j < points; ++j)
      s += vals[j] * std::exp(-2.0 * pi * I * double(n * j) / double(points));
    coef[n] = s / (double(points) * std::pow(radius, n));
  }
  // Fix the free k*pi in d_0.
  cplx ref = 0.0;
  if (curve != SmallNuCurve::first && curve != SmallNuCurve::chazy) {
    cplx px1 = data.px1;
    bool minus = curve == SmallNuCurve::case1 || curve == SmallNuCurve::case3;
    ref = (minus ? -0.5 : 0.5) * I * std::log((2.0 - px1) / 4.0);
  }
  coef[0] = unwrap_near(coef[0], ref);
  return coef;
}

std::vector<cplx> d_small_nu(const MonodromyData& data, int order, SmallNuCurve curve) {
  curve = resolve_curve(data, curve);
  std::vector<cplx> c = d_small_nu_numeric(data, order, curve);
  if (curve == SmallNuCurve::first) {
    c[0] = 0.0;
    if (order >= 1) c[1] = d1_first_case(0.5 * data.theta_inf, data.p01, data.px1);
  } else if (curve != SmallNuCurve::chazy) {
    int m = degenerate_m(curve, 0.5 * data.theta_inf);
    bool minus = curve == SmallNuCurve::case1 || curve == SmallNuCurve::case3;
    c[0] = (minus ? -0.5 : 0.5) * I * std::log((2.0 - data.px1) / 4.0);
    if (order >= 1) {
      int a = minus ? m : 1 - m;
      c[1] = 2.0 * (digamma(cplx(a)) + euler_gamma - 2.0 * ln2);
    }
  }
  return c;
}

void validate(const BranchParams& p) {
  if (!(p.nu > 0.0) || !std::isfinite(p.nu))
    throw Error(ErrorKind::domain, "nu must be real and > 0");
  if (!finite(p.mu) || !finite(p.d)) throw Error(ErrorKind::domain, "non-finite mu or d");
  if (std::abs(2.0 * p.mu - 1.0 - 2.0 * I * p.nu) < 1e-12 ||
      std::abs(2.0 * p.mu - 1.0 + 2.0 * I * p.nu) < 1e-12)
    throw Error(ErrorKind::resonance, "2mu - 1 = +-2i nu is excluded");
}

}  // namespace pvi
