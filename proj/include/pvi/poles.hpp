// Zeros of y_1, the pole-free region around them, and the series for the poles
//   xi_k(j) = x_k(j) + sum_{N>=2} Delta_N(j) x_k(j)^N.
#pragma once

#include <string>
#include <vector>

#include "pvi/monodromy.hpp"
#include "pvi/series.hpp"

namespace pvi {

struct ZeroInfo {
  cplx x;             // x_k(j)
  cplx log_x;         // continuous logarithm; Im may leave (-pi, pi]
  int braid_loops;    // n with Im(log_x) - 2 pi n in (-pi, pi]; nonzero means off the principal sheet
  bool double_zero;   // mu = 1/2: the two families coincide
};

/// r = (2mu - 1 + 2i nu) / (2mu - 1 - 2i nu).
cplx zero_ratio(const BranchParams& p);

ZeroInfo zero_info(const BranchParams& p, int j, int k);

/// x_k(j) = exp(log x_k(j)); see zero_info for the sheet.
cplx zeros(const BranchParams& p, int j, int k);

/// Y[n][N] = x^N d^N y_n/dx^N at x_k(j), n = 1..n_max, N = 0..N_max.
struct DerivativeConstants {
  int j = 1;
  std::vector<std::vector<cplx>> Y;  // Y[n][N], row 0 unused
  const cplx& at(int n, int N) const { return Y.at(n).at(N); }
};

DerivativeConstants derivative_constants(const CoefficientTable<cplx>& table, const BranchParams& p, int j,
                                         int n_max, int N_max);

/// Delta_2..Delta_{N_max} (index N; entries 0 and 1 unused) by zeroing successive x-orders.
std::vector<cplx> delta_coefficients(const DerivativeConstants& Y, int N_max);

/// Closed forms of Delta_3, Delta_4 for family j.
std::pair<cplx, cplx> delta_closed_forms(cplx mu, double nu, int j);

struct Threshold {
  int K = -1;          // smallest k with |x_k(1)|, |x_k(2)| both below min_bound; -1 if none up to the cap
  double min_bound = 0.0;
  double bound1 = 0.0;  // bound for |x_k(1)|
  double bound2 = 0.0;  // bound for |x_k(2)|
  double theta = 0.0;   // arg r
};

Threshold consistency_threshold(const BranchParams& p);

/// Smallest k >= 0 with |x_k(j)| < radius/2.
int first_in_disk(const BranchParams& p, const CoefficientTable<cplx>& table, int j);

struct PolePrediction {
  int j = 1, k = 0;
  cplx x;                 // zero of y_1
  cplx xi_seed;           // partial sum of the Delta series
  cplx xi;                // Newton-polished zero of the truncated 1/y
  double seed_err = 0.0;  // |Delta_{N_max}| |x|^{N_max+1}
  double polish_err = 0.0;  // last Newton step
  int braid_loops = 0;
};

/// Holds a table and branch parameters; Delta coefficients are computed once per family.
class PoleSolver {
 public:
  PoleSolver(BranchParams params, CoefficientTable<cplx> table, int N_max = 6);

  const BranchParams& params() const { return params_; }
  const CoefficientTable<cplx>& table() const { return table_; }
  const std::vector<cplx>& delta(int j) const { return j == 1 ? delta1_ : delta2_; }
  const Threshold& threshold() const { return thr_; }
  int k0(int j) const { return j == 1 ? k01_ : k02_; }
  int N_max() const { return N_max_; }

  /// Seed from the Delta series, then Newton on the series for 1/y.
  PolePrediction predict_pole(int j, int k) const;

  /// Seed only; requires k >= max(K, k0).
  cplx seed(int j, int k, double* err = nullptr) const;

  /// Complex Newton on 1/y from `start`, on the sheet of `log_ref` (log of a nearby point).
  cplx polish(cplx start, cplx log_ref, double* last_step = nullptr) const;

 private:
  BranchParams params_;
  CoefficientTable<cplx> table_;
  int N_max_;
  std::vector<cplx> delta1_, delta2_;
  Threshold thr_;
  int k01_, k02_;
};

struct PoleSequence {
  int j = 1;
  std::vector<PolePrediction> entries;
  std::vector<cplx> delta;
  int k0 = 0;
  int K = 0;
};

PoleSequence pole_sequence(const PoleSolver& s, int j, int k_max);

struct ExclusionRegion {
  double R_eps = 0.0;
  double C_f = 0.0;
  double C_eps = 0.0;          // |2mu-1| tan eps, or nu^2 tan^2 eps at mu = 1/2
  double C_eps_numeric = 0.0;  // numeric minimum of |y_1| on the sector boundaries
  double disk_radius = 0.0;    // |x_{k0}| used for C_f
};

/// Angles (principal) of the two zero rays.
std::pair<double, double> zero_ray_angles(const BranchParams& p);

ExclusionRegion exclusion_region(const BranchParams& p, const CoefficientTable<cplx>& table, double eps);

/// Minimum of |1/y| on an n_r x n_a log-radial grid of U(R, eps) (radii over three decades).
double exclusion_grid_min(const BranchParams& p, const CoefficientTable<cplx>& table, double R, double eps,
                          int n_r = 100, int n_a = 100);

/// CSV with columns j,k,re(x),im(x),re(xi),im(xi),seed_err,polish_err,disk_radius (|x|^2).
std::string poles_csv(const std::vector<PoleSequence>& seqs);

}  // namespace pvi
