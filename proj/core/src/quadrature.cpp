#include "cesbohr/quadrature.hpp"

#include <cmath>

namespace cesbohr {

namespace {

// 15-point Kronrod abscissae on [-1,1] (positive half) with the embedded
// 7-point Gauss rule on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr int kMaxDepth = 40;

struct PanelResult {
  std::complex<double> kronrod;
  double error;
};

PanelResult gk15(const std::function<std::complex<double>(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const std::complex<double> fc = f(center);
  std::complex<double> kron = kWgk[7] * fc;
  std::complex<double> gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const std::complex<double> fsum = f(center - dx) + f(center + dx);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

std::complex<double> adapt(const std::function<std::complex<double>(double)>& f,
                           double a, double b, double tol, int depth) {
  const PanelResult p = gk15(f, a, b);
  if (!std::isfinite(p.kronrod.real()) || !std::isfinite(p.kronrod.imag()))
    throw QuadratureError("integrate: non-finite integrand value");
  if (p.error <= tol) return p.kronrod;
  if (depth >= kMaxDepth)
    throw QuadratureError("integrate: failed to converge at max subdivision depth");
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  if (a == b) return {0.0, 0.0};
  return adapt(f, a, b, abs_tol, 0);
}

double integrate_real(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  return integrate([&f](double t) { return std::complex<double>(f(t), 0.0); }, a, b, abs_tol).real();
}

}  // namespace cesbohr
