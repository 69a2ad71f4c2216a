// Shared scalar aliases, constants and the error type used across the library.
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pvi {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr cplx I{0.0, 1.0};

enum class ErrorKind {
  domain,
  pole,
  divergence,
  resonance,
  degenerate_mismatch,
  singular_system,
  out_of_disk,
  branch_cut,
  near_pole,
  double_zero,
  below_threshold,
  no_valid_shift,
  off_curve,
  no_pole,
  step_collapse,
  invalid_argument,
  usage,
  io
};

const char* to_string(ErrorKind k);

/// Single exception type; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws if z has a NaN or infinite component.
inline cplx checked(cplx z, const char* where) {
  if (!finite(z)) throw Error(ErrorKind::domain, std::string("non-finite value in ") + where);
  return z;
}

}  // namespace pvi
