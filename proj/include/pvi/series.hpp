// Series engine for the oscillating branch
//   1/y(x) = sum_{n>=1} x^{n-1} sum_{|m|<=n} A_nm e^{2imd} x^{2imnu}.
// Everything here is templated on the complex scalar C (std::complex<double> in the
// library; a multiprecision complex works as long as Eigen knows about it).
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pvi/common.hpp"

namespace pvi {

template <class C>
using real_t = typename C::value_type;

namespace detail {

template <class C>
C cx(double re, double im = 0.0) {
  using R = real_t<C>;
  return C(R(re), R(im));
}

template <class R>
double to_double(const R& r) {
  return static_cast<double>(r);
}

template <class C>
bool is_zero(const C& z) {
  return z == C(0);
}

}  // namespace detail

/// One term c x^p t^m of an exponent series.
template <class C>
struct ExponentMonomial {
  int p = 0;
  int m = 0;
  C c{};
};

/// Dense truncated double series sum_{p=0..P} sum_{|m|<=W} c(p,m) x^p t^m with t = x^{2i nu}.
/// Rows are powers of x; columns the t-exponent, offset by W.
template <class C>
class ExpSeries {
 public:
  using Matrix = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  ExpSeries() = default;
  ExpSeries(int P, int W) : P_(P), W_(W), c_(Matrix::Zero(P + 1, 2 * W + 1)) {}

  int max_p() const { return P_; }
  int width() const { return W_; }

  C& operator()(int p, int m) { return c_(p, m + W_); }
  const C& operator()(int p, int m) const { return c_(p, m + W_); }

  const Matrix& coefficients() const { return c_; }

  /// Range [lo, hi] of m with nonzero coefficients in row p; lo > hi if the row is empty.
  std::pair<int, int> support(int p) const {
    int lo = W_ + 1, hi = -W_ - 1;
    for (int m = -W_; m <= W_; ++m)
      if (!detail::is_zero((*this)(p, m))) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
    return {lo, hi};
  }

  /// Row q of (a*b), using rows p of a and q-p of b.
  static void row_product(const ExpSeries& a, const ExpSeries& b, int q, ExpSeries& out) {
    for (int m = -out.W_; m <= out.W_; ++m) out(q, m) = C(0);
    for (int p = 0; p <= q; ++p) {
      auto [alo, ahi] = a.support(p);
      if (alo > ahi) continue;
      auto [blo, bhi] = b.support(q - p);
      for (int m1 = alo; m1 <= ahi; ++m1) {
        const C& x = a(p, m1);
        if (detail::is_zero(x)) continue;
        for (int m2 = blo; m2 <= bhi; ++m2) {
          int m = m1 + m2;
          if (m < -out.W_ || m > out.W_)
            throw Error(ErrorKind::invalid_argument, "ExpSeries product exceeds width");
          out(q, m) += x * b(q - p, m2);
        }
      }
    }
  }

  /// Row p multiplied by (p + 2i m nu): the action of x d/dx.
  void theta_row(const ExpSeries& src, int p, const real_t<C>& nu) {
    using R = real_t<C>;
    for (int m = -W_; m <= W_; ++m) (*this)(p, m) = src(p, m) * C(R(p), R(2 * m) * nu);
  }

  std::vector<ExponentMonomial<C>> monomials() const {
    std::vector<ExponentMonomial<C>> out;
    for (int p = 0; p <= P_; ++p)
      for (int m = -W_; m <= W_; ++m)
        if (!detail::is_zero((*this)(p, m))) out.push_back({p, m, (*this)(p, m)});
    return out;
  }

  /// Builds a series from monomials, merging equal (p, m) keys.
  static ExpSeries from_monomials(const std::vector<ExponentMonomial<C>>& ms, int P, int W) {
    ExpSeries s(P, W);
    for (const auto& t : ms) {
      if (t.p < 0 || t.p > P || t.m < -W || t.m > W)
        throw Error(ErrorKind::invalid_argument, "monomial outside series bounds");
      s(t.p, t.m) += t.c;
    }
    return s;
  }

 private:
  int P_ = 0, W_ = 0;
  Matrix c_;
};

/// Triangular table A[n][m], 1 <= n <= N, |m| <= n. Immutable once built.
template <class C>
class CoefficientTable {
 public:
  using R = real_t<C>;

  CoefficientTable(C mu, R nu, std::vector<std::vector<C>> rows, double radius)
      : mu_(mu), nu_(nu), A_(std::move(rows)), radius_(radius) {
    if (A_.empty()) throw Error(ErrorKind::invalid_argument, "empty coefficient table");
    for (std::size_t i = 0; i < A_.size(); ++i)
      if (A_[i].size() != 2 * (i + 1) + 1)
        throw Error(ErrorKind::invalid_argument, "row " + std::to_string(i + 1) + " has wrong length");
    if (!(radius_ > 0.0)) throw Error(ErrorKind::invalid_argument, "radius estimate must be > 0");
  }

  const C& mu() const { return mu_; }
  const R& nu() const { return nu_; }
  int order() const { return int(A_.size()); }
  double radius() const { return radius_; }
  const C& a(int n, int m) const { return A_.at(n - 1).at(m + n); }
  const std::vector<std::vector<C>>& rows() const { return A_; }

 private:
  C mu_;
  R nu_;
  std::vector<std::vector<C>> A_;
  double radius_;
};

/// Root-test radius: (sup_m |A_nm|)^{-1/n}, geometric mean over the top three orders, halved.
template <class C>
double radius_estimate(const std::vector<std::vector<C>>& A) {
  using std::abs;
  int N = int(A.size());
  int first = std::max(1, N - 2);
  double logsum = 0.0;
  int cnt = 0;
  for (int n = first; n <= N; ++n) {
    double sup = 0.0;
    for (const C& c : A[n - 1]) sup = std::max(sup, detail::to_double(abs(c)));
    if (sup == 0.0) continue;
    logsum += -std::log(sup) / n;
    ++cnt;
  }
  if (cnt == 0) return 1.0;
  return 0.5 * std::exp(logsum / cnt);
}

namespace detail {

// Numerator of x^2 (y'' - RHS) with y = 1/u, U1 = x u', U2 = x (x u')':
// sum coef * x^ex u^b U1^c U2^e, coef = k1 + ka alpha + kb beta + kg gamma + kd delta.
struct ETerm {
  int ex, b, c, e;
  double k1, ka, kb, kg, kd;
};

inline constexpr ETerm eterms[] = {
    {0, 0, 0, 0, 0, -2, 0, 0, 0}, {0, 0, 2, 0, 1, 0, 0, 0, 0},   {0, 1, 0, 0, 0, 4, 0, 0, 0},
    {0, 1, 0, 1, -2, 0, 0, 0, 0}, {0, 1, 2, 0, -2, 0, 0, 0, 0},  {0, 2, 0, 0, 0, -2, 0, 2, 0},
    {0, 2, 0, 1, 2, 0, 0, 0, 0},  {1, 0, 2, 0, -2, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 4, 0, 0, 0},
    {1, 1, 0, 1, 4, 0, 0, 0, 0},  {1, 1, 1, 0, 2, 0, 0, 0, 0},   {1, 1, 2, 0, 2, 0, 0, 0, 0},
    {1, 2, 0, 0, 0, -8, -2, -2, 2}, {1, 2, 0, 1, -2, 0, 0, 0, 0}, {1, 2, 1, 0, -4, 0, 0, 0, 0},
    {1, 2, 2, 0, 3, 0, 0, 0, 0},  {1, 3, 0, 0, 0, 4, 4, -4, -4}, {1, 3, 0, 1, -2, 0, 0, 0, 0},
    {1, 3, 1, 0, 2, 0, 0, 0, 0},  {1, 4, 0, 0, 0, 0, -2, 0, 2},  {2, 0, 2, 0, 1, 0, 0, 0, 0},
    {2, 1, 0, 1, -2, 0, 0, 0, 0}, {2, 1, 1, 0, -2, 0, 0, 0, 0},  {2, 1, 2, 0, 2, 0, 0, 0, 0},
    {2, 2, 0, 0, 0, -2, 0, 0, -2}, {2, 2, 0, 1, -2, 0, 0, 0, 0}, {2, 2, 1, 0, 4, 0, 0, 0, 0},
    {2, 2, 2, 0, -6, 0, 0, 0, 0}, {2, 3, 0, 0, 0, 4, 4, 4, 4},   {2, 3, 0, 1, 4, 0, 0, 0, 0},
    {2, 3, 1, 0, -2, 0, 0, 0, 0}, {2, 4, 0, 0, 0, -2, -8, 2, -2}, {2, 5, 0, 0, 0, 0, 4, 0, 0},
    {3, 1, 2, 0, -2, 0, 0, 0, 0}, {3, 2, 0, 1, 2, 0, 0, 0, 0},   {3, 2, 2, 0, 3, 0, 0, 0, 0},
    {3, 3, 0, 1, -2, 0, 0, 0, 0}, {3, 4, 0, 0, 0, 0, -2, -2, 0}, {3, 5, 0, 0, 0, 0, 4, 0, 0},
    {3, 6, 0, 0, 0, 0, -2, 0, 0},
};

// Cached products of the unknown series, grown one row per order.
template <class C>
struct SubstitutionCache {
  int P, W;
  real_t<C> nu;
  ExpSeries<C> u, U1, U2, U1sq;
  std::vector<ExpSeries<C>> pw;      // u^b, b = 0..6
  std::vector<ExpSeries<C>> pwU1;    // u^b U1, b = 0..3
  std::vector<ExpSeries<C>> pwU1sq;  // u^b U1^2, b = 0..3
  std::vector<ExpSeries<C>> pwU2;    // u^b U2, b = 0..3

  SubstitutionCache(int P_, int W_, const real_t<C>& nu_)
      : P(P_), W(W_), nu(nu_), u(P_, W_), U1(P_, W_), U2(P_, W_), U1sq(P_, W_),
        pw(7, ExpSeries<C>(P_, W_)), pwU1(4, ExpSeries<C>(P_, W_)),
        pwU1sq(4, ExpSeries<C>(P_, W_)), pwU2(4, ExpSeries<C>(P_, W_)) {
    pw[0](0, 0) = C(1);
  }

  // Recomputes every cached row p from the current row p of u.
  void refresh_row(int p) {
    U1.theta_row(u, p, nu);
    U2.theta_row(U1, p, nu);
    ExpSeries<C>::row_product(U1, U1, p, U1sq);
    for (int b = 1; b <= 6; ++b) ExpSeries<C>::row_product(pw[b - 1], u, p, pw[b]);
    for (int b = 0; b <= 3; ++b) {
      ExpSeries<C>::row_product(pw[b], U1, p, pwU1[b]);
      ExpSeries<C>::row_product(pw[b], U1sq, p, pwU1sq[b]);
      ExpSeries<C>::row_product(pw[b], U2, p, pwU2[b]);
    }
  }

  const ExpSeries<C>& product(int b, int c, int e) const {
    if (e == 1) return pwU2[b];
    if (c == 1) return pwU1[b];
    if (c == 2) return pwU1sq[b];
    return pw[b];
  }

  // Row P of the numerator polynomial for the given equation parameters.
  std::vector<C> e_row(int row, const C (&par)[4]) const {
    std::vector<C> out(2 * W + 1, C(0));
    for (const ETerm& t : eterms) {
      if (t.ex > row) continue;
      C coef = cx<C>(t.k1) + cx<C>(t.ka) * par[0] + cx<C>(t.kb) * par[1] + cx<C>(t.kg) * par[2] +
               cx<C>(t.kd) * par[3];
      if (is_zero(coef)) continue;
      const ExpSeries<C>& s = product(t.b, t.c, t.e);
      for (int m = -W; m <= W; ++m) out[m + W] += coef * s(row - t.ex, m);
    }
    return out;
  }
};

template <class C>
std::vector<C> laurent_mul(const std::vector<C>& a, const std::vector<C>& b) {
  // Both centred: index i <-> exponent i - (size-1)/2.
  std::vector<C> r(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace detail

/// First-order coefficients (A_{1,-1}, A_{10}, A_{11}) of the PVImu branch.
template <class C>
std::vector<C> first_order_coefficients(const C& mu, const real_t<C>& nu) {
  using R = real_t<C>;
  C two_mu_1 = R(2) * mu - R(1);
  C twoinu = C(R(0), R(2) * nu);
  R nu2 = nu * nu;
  C am1 = (two_mu_1 + twoinu) * (two_mu_1 + twoinu) / C(R(16) * nu2);
  C a0 = -(two_mu_1 * two_mu_1 - C(R(4) * nu2)) / C(R(8) * nu2);
  C ap1 = (two_mu_1 - twoinu) * (two_mu_1 - twoinu) / C(R(16) * nu2);
  return {am1, a0, ap1};
}

template <class C>
void check_branch_parameters(const C& mu, const real_t<C>& nu) {
  using R = real_t<C>;
  using std::abs;
  if (!(nu > R(0))) throw Error(ErrorKind::domain, "nu must be > 0");
  C two_mu_1 = R(2) * mu - R(1);
  C twoinu = C(R(0), R(2) * nu);
  if (detail::to_double(abs(two_mu_1 - twoinu)) < 1e-12 ||
      detail::to_double(abs(two_mu_1 + twoinu)) < 1e-12)
    throw Error(ErrorKind::resonance, "2mu - 1 = +-2i nu");
}

/// A_nm up to order N by substitution into PVImu, one order at a time; each order is a
/// least-squares solve (column-pivoting QR) of the overdetermined but consistent system.
template <class C>
CoefficientTable<C> generate_coefficients(const C& mu, const real_t<C>& nu, int N) {
  using R = real_t<C>;
  using std::abs;
  using Mat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<C, Eigen::Dynamic, 1>;
  if (N < 1 || N > 40) throw Error(ErrorKind::invalid_argument, "order N must be in [1, 40]");
  check_branch_parameters(mu, nu);
  if (detail::to_double(nu) * 2.0 < 1e-8)
    throw Error(ErrorKind::resonance, "exponents p + 2i m nu collide numerically (nu too small)");

  const int P = N - 1, W = N + 6;
  const C two_mu_1 = R(2) * mu - R(1);
  const C par[4] = {two_mu_1 * two_mu_1 / R(2), C(0), C(0), detail::cx<C>(0.5)};
  detail::SubstitutionCache<C> cache(P, W, nu);

  auto a1 = first_order_coefficients(mu, nu);
  for (int m = -1; m <= 1; ++m) cache.u(0, m) = a1[m + 1];
  cache.refresh_row(0);

  const R eps = std::numeric_limits<R>::epsilon();
  const double tol = 100.0 * std::sqrt(detail::to_double(eps));
  {
    auto e0 = cache.e_row(0, par);
    R scale(1), res(0);
    for (const C& c : a1) scale = std::max<R>(scale, R(abs(c)));
    for (const C& c : e0) res = std::max<R>(res, R(abs(c)));
    if (detail::to_double(res / (scale * scale * scale)) > tol)
      throw Error(ErrorKind::singular_system, "first-order coefficients fail the x^0 equations");
  }

  // Linearisation of row P of E in row P of u: (G0 + lambda G1 + lambda^2 G2) t^m with
  // lambda = P + 2i m nu; G* are Laurent polynomials in t from the x^0 monomials.
  const int gw = 4;
  std::vector<C> G0(2 * gw + 1, C(0)), G1(2 * gw + 1, C(0)), G2(2 * gw + 1, C(0));
  for (const auto& t : detail::eterms) {
    if (t.ex != 0) continue;
    C coef = detail::cx<C>(t.k1) + detail::cx<C>(t.ka) * par[0] + detail::cx<C>(t.kb) * par[1] +
             detail::cx<C>(t.kg) * par[2] + detail::cx<C>(t.kd) * par[3];
    auto add = [&](std::vector<C>& G, R mult, int b, int c, int e) {
      const auto& s = cache.product(b, c, e);
      for (int m = -gw; m <= gw; ++m) G[m + gw] += coef * mult * s(0, m);
    };
    if (t.b > 0) add(G0, R(t.b), t.b - 1, t.c, t.e);
    if (t.c > 0) add(G1, R(t.c), t.b, t.c - 1, t.e);
    if (t.e > 0) add(G2, R(t.e), t.b, t.c, t.e - 1);
  }

  std::vector<std::vector<C>> rows;
  rows.push_back(a1);
  for (int p = 1; p <= P; ++p) {
    const int M = p + 1;
    const int ncol = 2 * M + 1, nrow = 2 * W + 1;
    cache.refresh_row(p);  // row p of u is zero here
    auto base = cache.e_row(p, par);
    Mat A = Mat::Zero(nrow, ncol);
    Vec b(nrow);
    for (int i = 0; i < nrow; ++i) b(i) = -base[i];
    for (int j = 0; j < ncol; ++j) {
      int m = j - M;
      C lam(R(p), R(2 * m) * nu);
      for (int k = -gw; k <= gw; ++k) {
        int row = m + k + W;
        if (row < 0 || row >= nrow) continue;
        A(row, j) = G0[k + gw] + lam * G1[k + gw] + lam * lam * G2[k + gw];
      }
    }
    // Column equilibration keeps the pivoting meaningful when A_nm ~ nu^{-2n}.
    Vec scale(ncol);
    for (int j = 0; j < ncol; ++j) {
      R s = A.col(j).norm();
      if (s == R(0)) throw Error(ErrorKind::singular_system, "zero column at order " + std::to_string(p + 1));
      scale(j) = C(R(1) / s);
      A.col(j) *= scale(j);
    }
    Eigen::ColPivHouseholderQR<Mat> qr(A);
    if (qr.rank() < ncol)
      throw Error(ErrorKind::singular_system, "rank-deficient system at order " + std::to_string(p + 1));
    Vec x = qr.solve(b);
    R resid = (A * x - b).norm();
    R ref = b.norm() + A.norm() * x.norm();
    if (ref > R(0) && detail::to_double(resid / ref) > tol)
      throw Error(ErrorKind::singular_system,
                  "inconsistent system at order " + std::to_string(p + 1) + ", relative residual " +
                      std::to_string(detail::to_double(resid / ref)));
    std::vector<C> row(ncol);
    for (int j = 0; j < ncol; ++j) {
      row[j] = x(j) * scale(j);
      cache.u(p, j - M) = row[j];
    }
    cache.refresh_row(p);
    rows.push_back(std::move(row));
  }
  double radius = radius_estimate(rows);
  return CoefficientTable<C>(mu, nu, std::move(rows), radius);
}

/// Value of a truncated series with a rough tail bound.
template <class C>
struct SeriesValue {
  C value;
  double error_bound = 0.0;
};

/// 1/y and its first two x-derivatives from the series, given ln x.
template <class C>
struct BranchJet {
  C w, dw, d2w;  // 1/y, (1/y)', (1/y)''
  double error_bound = 0.0;
};

/// Jet of the truncated series using orders n <= n_max (n_max <= 0 means all) at x = exp(logx).
template <class C>
BranchJet<C> branch_jet(const CoefficientTable<C>& tab, const C& d, const C& logx, int n_max = 0) {
  using R = real_t<C>;
  using std::abs;
  using std::exp;
  const int N = (n_max <= 0 || n_max > tab.order()) ? tab.order() : n_max;
  const C iu(R(0), R(1));
  const C x = exp(logx);
  const C t = exp(R(2) * iu * d + R(2) * iu * tab.nu() * logx);
  std::vector<C> tp(2 * N + 1);
  tp[N] = C(1);
  for (int m = 1; m <= N; ++m) {
    tp[N + m] = tp[N + m - 1] * t;
    tp[N - m] = tp[N - m + 1] / t;
  }
  C w(0), th(0), th2(0), xp(1);
  double last = 0.0;
  for (int n = 1; n <= N; ++n) {
    C s(0), s1(0), s2(0);
    for (int m = -n; m <= n; ++m) {
      C term = tab.a(n, m) * tp[N + m];
      C lam(R(n - 1), R(2 * m) * tab.nu());
      s += term;
      s1 += lam * term;
      s2 += lam * lam * term;
      if (n == N) last = std::max(last, detail::to_double(abs(term * xp)));
    }
    w += xp * s;
    th += xp * s1;
    th2 += xp * s2;
    xp *= x;
  }
  BranchJet<C> j;
  j.w = w;
  j.dw = th / x;
  j.d2w = (th2 - th) / (x * x);
  double q = detail::to_double(abs(x)) / (2.0 * tab.radius());
  j.error_bound = q < 1.0 ? last * q / (1.0 - q) : std::numeric_limits<double>::infinity();
  return j;
}

/// 1/y at the point with logarithm `logx` (any sheet).
template <class C>
SeriesValue<C> eval_branch_inverse_log(const CoefficientTable<C>& tab, const C& d, const C& logx,
                                       int n_max = 0) {
  using std::exp;
  using std::abs;
  double ax = detail::to_double(abs(exp(logx)));
  if (!(ax < tab.radius()))
    throw Error(ErrorKind::out_of_disk, "|x| = " + std::to_string(ax) + " outside radius estimate " +
                                            std::to_string(tab.radius()));
  auto j = branch_jet(tab, d, logx, n_max);
  return {j.w, j.error_bound};
}

/// 1/y on the principal sheet, |arg x| < pi.
template <class C>
SeriesValue<C> eval_branch_inverse(const CoefficientTable<C>& tab, const C& d, const C& x, int n_max = 0) {
  using std::imag;
  using std::log;
  using std::real;
  using R = real_t<C>;
  if (x == C(0)) throw Error(ErrorKind::domain, "x = 0");
  if (imag(x) == R(0) && real(x) < R(0))
    throw Error(ErrorKind::branch_cut, "x on the negative real axis");
  return eval_branch_inverse_log(tab, d, C(log(x)), n_max);
}

/// Default floor on |1/y| below which eval_branch reports a near-pole error.
inline constexpr double near_pole_floor = 1e-15;

template <class C>
C eval_branch(const CoefficientTable<C>& tab, const C& d, const C& x, double floor = near_pole_floor) {
  using std::abs;
  C w = eval_branch_inverse(tab, d, x).value;
  if (detail::to_double(abs(w)) < floor) throw Error(ErrorKind::near_pole, "|1/y| below floor");
  return C(real_t<C>(1)) / w;
}

/// y'' minus the right-hand side of PVI(alpha, beta, gamma, delta), evaluated verbatim.
template <class C>
C pvi_residual_general(const C& alpha, const C& beta, const C& gamma, const C& delta, const C& y,
                       const C& y1, const C& y2, const C& x) {
  using R = real_t<C>;
  const C one(R(1));
  if (x == C(0) || x == one) throw Error(ErrorKind::domain, "denominator zero: x in {0, 1}");
  if (y == C(0) || y == one || y == x) throw Error(ErrorKind::domain, "denominator zero: y in {0, 1, x}");
  C rhs = R(0.5) * (one / y + one / (y - one) + one / (y - x)) * y1 * y1 -
          (one / x + one / (x - one) + one / (y - x)) * y1 +
          y * (y - one) * (y - x) / (x * x * (x - one) * (x - one)) *
              (alpha + beta * x / (y * y) + gamma * (x - one) / ((y - one) * (y - one)) +
               delta * x * (x - one) / ((y - x) * (y - x)));
  return y2 - rhs;
}

/// PVImu: alpha = (2mu-1)^2/2, beta = gamma = 0, delta = 1/2.
template <class C>
C pvi_residual(const C& mu, const C& y, const C& y1, const C& y2, const C& x) {
  using R = real_t<C>;
  C a = (R(2) * mu - R(1)) * (R(2) * mu - R(1)) / R(2);
  return pvi_residual_general(a, C(0), C(0), detail::cx<C>(0.5), y, y1, y2, x);
}

/// Residual of the branch truncated after order n_max (orders 1..n_max), from the analytic jet.
template <class C>
C truncated_residual(const CoefficientTable<C>& tab, const C& d, const C& logx, int n_max) {
  using R = real_t<C>;
  using std::exp;
  auto j = branch_jet(tab, d, logx, n_max);
  const C one(R(1));
  C y = one / j.w;
  C y1 = -j.dw / (j.w * j.w);
  C y2 = -j.d2w / (j.w * j.w) + R(2) * j.dw * j.dw / (j.w * j.w * j.w);
  return pvi_residual(tab.mu(), y, y1, y2, C(exp(logx)));
}

// Non-template entry points (double precision).

/// generate_coefficients carried out in long double and rounded to double. The pole
/// recursion cancels large A_nm against small Delta_N, so it needs the last bits.
CoefficientTable<cplx> coefficient_table(cplx mu, double nu, int N);

/// Closed forms for orders 1..4 (with the corrections noted in the README).
CoefficientTable<cplx> builtin_coefficients(cplx mu, double nu);

struct GeneralLeading {
  cplx a_m1, a_0, a_p1;      // tabulated triple
  cplx derived_a0;           // from the x^0 equations
  cplx derived_product;      // A_{1,1} A_{1,-1} from the x^0 equations
  double discrepancy = 0.0;  // max deviation of tabulated vs derived (a_0 and product)
};

/// Leading coefficients for general PVI with delta = 1/2 normalization of the oscillating branch.
/// The x^0 equations fix A_10 and A_11 A_1-1; the split of the product is a choice of d.
GeneralLeading general_pvi_leading(cplx alpha, cplx beta, cplx gamma, cplx delta, double nu);

/// Coefficients (ascending in ln x) of P_1 (n = 1, degree 2) or P_2 (n = 2, degree 4).
std::vector<cplx> log_limit_polynomials(cplx mu, cplx d1, int n);

/// P_2 before the constant and ln x corrections (kept for comparison only).
std::vector<cplx> log_limit_polynomials_literal(cplx mu, cplx d1);

/// Evaluates a polynomial with ascending coefficients.
cplx poly_eval(const std::vector<cplx>& c, cplx z);

extern template CoefficientTable<cplx> generate_coefficients<cplx>(const cplx&, const double&, int);

}  // namespace pvi
