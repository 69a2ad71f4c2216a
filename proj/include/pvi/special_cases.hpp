// Two special branches: quantum cohomology of CP^2 (mu = -1, all p = -7, nu = 2 ln G / pi
// with G the golden ratio) and the Chazy limit along p0x = p01 = px1 = -2 cosh(2 pi nu).
#pragma once

#include <cmath>
#include <vector>

#include "pvi/monodromy.hpp"
#include "pvi/poles.hpp"

namespace pvi {

/// Golden ratio.
inline const double golden = 0.5 * (1.0 + std::sqrt(5.0));

struct QCParameters {
  BranchParams params;  // d from the closed form, Re d in [0, pi)
  cplx d_closed;
  cplx d_series;
  cplx d_plus_variant;      // closed form with the sign inside the logarithm flipped
  bool minus_sign_matches;  // the "-" form reproduces d_series mod pi
};

/// nu, and d from the closed form and from its nu-series (both reported).
QCParameters qc_parameters(int series_terms = 60);

/// The closed form for d at QC, with the sign s = -1 (standard) or +1 in front of pi^2.
cplx qc_d_closed(double sign = -1.0);

/// The convergent nu-series for d (|nu| < 1/2), Re d normalized into [0, pi).
cplx qc_d_series(double nu, int terms = 60);

/// 2 sum (-1)^n (2nu)^{2n+1}/(2n+1) = 2 arctan(2 nu).
double arccos_series(double nu, int terms = 200);

/// x_k(j) = -i exp{-Re d/nu - 2(j-1)/nu |arccos(3/sqrt(4nu^2+9))|} exp{-k pi/nu}.
cplx qc_zeros(int j, int k);

/// Predicted pole of the QC branch from the poles module.
PolePrediction qc_poles(int k, int j, int N_max = 6, int order = 20);

/// Shared QC pole solver (coefficients through x^order).
const PoleSolver& qc_solver(int N_max = 6, int order = 20);

struct ChazyCurvePoint {
  double nu = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double cos_pi_theta = 0.0;    // branch [vi] u [vii]
  double cos_pi_theta_i = 0.0;  // branch [i] u [ii]
  double theta_inf = 0.0;       // -1 + arg(c1 - (i/2) sqrt c2)/pi, arg in [-pi, 0]
  double mu = 0.0;
  cplx unit;                    // c1 - (i/2) sqrt c2
};

/// 0 <= nu <= 2 ln G / pi.
ChazyCurvePoint chazy_curve(double nu);

/// Left-hand side of the cubic in (p0x, cos 2 pi mu).
double chazy_cubic(double p0x, double cos2pimu);

struct ChazySeries {
  std::vector<double> mu;  // Taylor coefficients of mu(nu), tabulated values (zeros where none)
  std::vector<cplx> d;     // d_0..d_order, tabulated values (d_3 = 0)
  std::vector<cplx> d_numeric;  // Cauchy-integral coefficients along the curve
  int tabulated_order = 7;        // coefficients above this are numeric only
};

ChazySeries chazy_series(int order = 8);

/// Second-order coefficient of mu(nu) from finite differences of chazy_curve (Richardson).
double chazy_mu2_finite_difference(double h = 2e-3);

enum class ChazyBranch { vii, i };

/// d on branch [vii]u[vi] or [i]u[ii], with the denominator factor squared; throws off_curve.
cplx chazy_d_closed(double nu, cplx theta_inf, ChazyBranch branch = ChazyBranch::vii, double tol = 1e-9);

/// d_1 = i pi/2 - 4 ln 2 - pi sqrt(3)/2.
cplx chazy_d1();

/// 1/P_1(ln x); rejects mu = 1/2.
cplx log_limit_check(cplx mu, cplx d1, cplx x);

/// 1/P_1^{(-1/2)}(ln x) = -1/((ln x + d_1 + 2)(ln x + d_1)).
cplx log_limit_check_chazy(cplx x);

}  // namespace pvi
