#include "expwin/kernels.hpp"

#include <cmath>
#include <sstream>

namespace expwin {

namespace detail {

void throw_non_positive_kernel(double t, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "kernel B(t) must be positive on (0,1), got B(" << t << ") = " << value;
  throw WindowError(ErrorKind::InvalidKernel, os.str());
}

}  // namespace detail

namespace {

constexpr int kScanPoints = 10000;
constexpr double kRefineTolerance = 1e-10;

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

// Golden-section search for the maximum of B on [lo, hi].
double golden_maximize(const KernelSpec& spec, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = kernel_eval(spec, c);
  double fd = kernel_eval(spec, d);
  while (b - a > kRefineTolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = kernel_eval(spec, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = kernel_eval(spec, d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void validate(const KernelSpec& spec) {
  std::visit(
      [](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PolynomialKernel>) {
          if (!positive_finite(k.m) || !positive_finite(k.n)) {
            std::ostringstream os;
            os << "polynomial kernel exponents must be positive, got m=" << k.m << " n=" << k.n;
            throw WindowError(ErrorKind::BadParameter, os.str());
          }
        } else if constexpr (std::is_same_v<K, ScaledSineKernel>) {
          if (!positive_finite(k.c)) {
            std::ostringstream os;
            os << "sine kernel coefficient must be positive, got c=" << k.c;
            throw WindowError(ErrorKind::BadParameter, os.str());
          }
        } else {
          validate(k.window);
        }
      },
      spec);

  // Positivity on a dense interior grid.
  for (int i = 1; i < 1000; ++i) kernel_eval(spec, i / 1000.0);
}

KernelPeak kernel_max(const KernelSpec& spec) {
  validate(spec);

  if (const auto* poly = std::get_if<PolynomialKernel>(&spec)) {
    const double t_star = poly->m / (poly->m + poly->n);
    return {t_star, kernel_eval(spec, t_star)};
  }

  int best = 1;
  double best_value = kernel_eval(spec, 1.0 / kScanPoints);
  for (int i = 2; i < kScanPoints; ++i) {
    const double v = kernel_eval(spec, double(i) / kScanPoints);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }

  const double lo = double(best - 1) / kScanPoints;
  const double hi = double(best + 1) / kScanPoints;
  double t_star = golden_maximize(spec, lo, hi);
  double b_max = kernel_eval(spec, t_star);
  if (best_value > b_max) {
    t_star = double(best) / kScanPoints;
    b_max = best_value;
  }
  if (!(b_max > 0.0)) detail::throw_non_positive_kernel(t_star, b_max);
  return {t_star, b_max};
}

}  // namespace expwin
