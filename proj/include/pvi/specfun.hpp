// Complex special functions: log-Gamma, digamma, odd zeta values,
// F(1/2,1/2,1;x), its logarithmic companion F1, and the complete elliptic
// integral K.
#pragma once

#include "pvi/common.hpp"

namespace pvi {

/// Principal branch of ln Gamma(z), Im in (-pi, pi].
cplx ln_gamma(cplx z);

/// Log-Gamma continued analytically from the positive real axis (Stirling branch).
/// Differs from ln_gamma by 2*pi*i*k; sums of these keep a consistent branch.
cplx ln_gamma_analytic(cplx z);

cplx digamma(cplx z);

/// Riemann zeta at odd n >= 3.
double zeta_odd(int n);

/// F(1/2,1/2,1;x) = sum [(1/2)_n/n!]^2 x^n, |x| < 1.
cplx hyp_F(cplx x, double tol = 1e-17);

/// F1(x) = sum [(1/2)_n/n!]^2 * 2[psi(n+1/2) - psi(n+1)] x^n, |x| < 1.
cplx hyp_F1(cplx x, double tol = 1e-17);

/// K(x) = (pi/2) F(1/2,1/2,1;x); AGM off the cut [1, inf).
cplx elliptic_K(cplx x);

}  // namespace pvi
