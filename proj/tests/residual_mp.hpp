#pragma once

namespace pvi::test {

/// Log-log slope of the truncated-branch residual at the QC point, 50-digit arithmetic.
double residual_slope_qc(int N);

}  // namespace pvi::test
