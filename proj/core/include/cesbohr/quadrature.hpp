#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace cesbohr {

/// Raised when the adaptive scheme hits its depth cap without meeting tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 15(7) quadrature on [a,b] to an absolute tolerance.
/// Panels are bisected (max depth 40) until |K15 - G7| meets the local budget.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, double abs_tol = 1e-12);

double integrate_real(const std::function<double(double)>& f,
                      double a, double b, double abs_tol = 1e-12);

}  // namespace cesbohr
