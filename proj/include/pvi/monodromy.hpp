// Monodromy data on the cubic surface and the maps to the integration
// constants (nu, d) of the oscillating branch at x = 0.
#pragma once

#include <utility>
#include <vector>

#include "pvi/common.hpp"

namespace pvi {

struct MonodromyData {
  cplx theta_inf;  // = 2 mu
  cplx p0x;
  cplx p01;
  cplx px1;
};

/// Integration constants of y(x; nu, d). `k_shift` records the k in d -> d + k*pi
/// applied to bring Re d into [0, pi]; the raw value is d - k_shift*pi.
struct BranchParams {
  cplx mu;
  double nu = 0.0;
  cplx d;
  int k_shift = 0;

  cplx raw_d() const { return d - double(k_shift) * pi; }
};

/// Which formula produced d.
enum class DCase { generic, case1, case2, case3, case4 };

struct DClassification {
  DCase kind = DCase::generic;
  int m = 0;  // the integer of the degenerate relation
};

/// Left-hand side of the cubic relation between (p0x, p01, px1, p_inf = 2 cos(pi theta_inf)).
cplx cubic_residual(const MonodromyData& data);

/// nu > 0 from p0x = -2 cosh(2 pi nu); requires p0x < -2.
double nu_from_p0x(double p0x);

/// Classifies 2mu = 2i nu + 1 - 2m (cases 1, 2) and 2mu = -2i nu + 2m - 1 (cases 3, 4).
/// Throws resonance when 2mu - 1 = +-2i nu.
DClassification classify_degenerate(cplx mu, double nu, double tol = 1e-9);

struct DOptions {
  double cubic_tol = 1e-8;   // relative to 1 + sum |p|^2
  double compat_tol = 1e-8;  // degenerate-case compatibility, relative
  double degenerate_tol = 1e-9;
};

/// (mu, nu, d) from monodromy data, Re d normalized into [0, pi].
BranchParams d_from_monodromy(const MonodromyData& data, const DOptions& opt = {});

/// Same, also reporting which formula was used.
BranchParams d_from_monodromy(const MonodromyData& data, DClassification& used,
                              const DOptions& opt = {});

/// Raw log-argument formula for d at complex nu, generic case. Returned value is
/// (i/2) * (sum of logs), so it is defined up to k*pi.
cplx d_generic_raw(cplx mu, cplx nu, cplx p01, cplx px1);

/// Raw degenerate-case formulas (i/2 ln{...} up to k*pi).
cplx d_degenerate_raw(DCase which, int m, cplx nu, cplx px1);

/// Loop x -> x e^{2 pi i}: p01', px1' from the braid action, d' = d + 2 pi i nu (not renormalized).
std::pair<BranchParams, MonodromyData> braid_continuation(const BranchParams& params,
                                                          const MonodromyData& data);

/// Curves along which d(nu) is expanded at nu = 0.
enum class SmallNuCurve {
  automatic,
  first,   // mu and px1 fixed, p01 on the cubic
  case1,
  case2,
  case3,
  case4,
  chazy    // p0x = p01 = px1 = -2cosh(2 pi nu), mu on the restricted cubic branch
};

/// Taylor coefficients d_0..d_order of d(nu) at nu = 0. `data` holds the nu -> 0 endpoint
/// (theta_inf = 2 mu(0), p01, px1 at p0x = -2). The first-case d_1 and the degenerate linear
/// coefficients use the closed forms; the rest come from a Cauchy integral of the raw formulas
/// in complex nu.
std::vector<cplx> d_small_nu(const MonodromyData& data, int order,
                             SmallNuCurve curve = SmallNuCurve::automatic);

/// Numerical Taylor coefficients only (no closed-form substitution); used for cross-checks.
std::vector<cplx> d_small_nu_numeric(const MonodromyData& data, int order, SmallNuCurve curve,
                                     double radius = 0.05, int points = 128);

/// Closed-form first-case d_1.
cplx d1_first_case(cplx mu, cplx p01, cplx px1);

/// Validates BranchParams invariants; throws domain or resonance errors.
void validate(const BranchParams& p);

}  // namespace pvi
