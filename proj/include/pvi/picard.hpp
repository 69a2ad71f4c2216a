// Picard's solutions of PVI at mu = 1/2:
//   y(x) = wp(nu1 w1(x) + nu2 w2(x); w1, w2) + (1 + x)/3,
// their pole lattice x_kN on the covering of the punctured disk, and the
// Lagrange series for the true poles xi_kN.
#pragma once

#include <string>
#include <vector>

#include "pvi/common.hpp"
#include "pvi/monodromy.hpp"

namespace pvi {

struct PicardParams {
  cplx nu1;
  cplx nu2;
};

struct LatticeIndex {
  int N = 0;
  int k = 0;
  bool operator==(const LatticeIndex&) const = default;
};

struct HalfPeriods {
  cplx omega1;
  cplx omega2;
};

/// w1 = K(x) = (pi/2) F, w2 = -(i/2)(F log x + F1) with log x = logx.
HalfPeriods half_periods_log(cplx logx);
HalfPeriods half_periods(cplx x);

/// w2 through i K(1 - x) (principal sheet only).
cplx omega2_complementary(cplx x);

/// Weierstrass wp by its Fourier series after the shift z -> z + 2 N w2, |N| <= 64.
cplx wp(cplx z, cplx omega1, cplx omega2);

/// y(x) on the sheet fixed by logx.
cplx picard_solution_log(const PicardParams& p, cplx logx);
cplx picard_solution(const PicardParams& p, cplx x);

/// 1/y, finite through the poles.
cplx picard_inverse_log(const PicardParams& p, cplx logx);

/// log x_kN = ln 16 + i pi (2k - nu1)/(nu2 + 2N).
cplx spiral_log(const PicardParams& p, int N, int k);
cplx spiral_points(const PicardParams& p, int N, int k);

/// n with Im(logx) - 2 pi n in [-pi, pi).
int sheet_of(cplx logx);

/// Coefficients c[0..order] (c[0] = 0) of xi(x) solving xi = x phi(xi),
/// phi = exp(-F1/F)/16, by recursive substitution.
std::vector<cplx> lagrange_pole_series(int order = 20);

/// Same coefficients from c_n = [a^{n-1}] phi(a)^n / n.
std::vector<cplx> lagrange_pole_series_direct(int order = 20);

/// Coefficients of phi(a) = exp(-F1(a)/F(a))/16.
std::vector<double> pole_generating_series(int order);

/// rho / max_{|a| = rho} |phi(a)| with rho = 1/4: the Lagrange series has a unique root for |x| below this.
double lagrange_radius(double rho = 0.25, int samples = 256);

struct PicardPole {
  int N = 0, k = 0;
  cplx x;         // x_kN
  cplx log_x;
  cplx xi_series; // series value at x_kN
  cplx xi;        // after Newton
  cplx log_xi;
  double inverse_abs = 0.0;  // |1/y(xi)|
  int sheet = 0;
};

/// Series at x_kN, then Newton on xi - x_kN phi(xi).
PicardPole picard_pole(const PicardParams& p, int N, int k, int order = 20);

/// All (N,k) with |x_kN| in [rmin, rmax) and Im log x_kN in [arg_lo, arg_hi).
/// Points are ordered by N, then by k.
std::vector<LatticeIndex> enumerate_visible(const PicardParams& p, double arg_lo, double arg_hi,
                                            double rmax = 1.0, double rmin = 1e-300,
                                            std::size_t max_points = 1000000);

/// Values of k (real) at which |x_kN| = rmax and Im log x_kN = arg_lo, arg_hi, for real N.
/// A NaN marks a constraint that does not depend on k.
struct VisibilityBounds {
  double N = 0.0;
  double k_radius = 0.0;
  double k_arg_lo = 0.0;
  double k_arg_hi = 0.0;
};

VisibilityBounds visibility_bounds(const PicardParams& p, double N, double arg_lo, double arg_hi, double rmax = 1.0);

/// Branch parameters of the mu = 1/2 series branch equal to the solution with nu2 = 2 i nu.
BranchParams picard_branch_params(const PicardParams& p);

/// CSV with columns N,k,re(x),im(x),re(xi),im(xi),sheet.
std::string picard_csv(const PicardParams& p, const std::vector<LatticeIndex>& idx, bool with_poles);

}  // namespace pvi
