// Internal quadrature and summation helpers.
#ifndef EXPWIN_SRC_NUMERIC_HPP
#define EXPWIN_SRC_NUMERIC_HPP

#include <Eigen/Dense>
#include <cmath>

namespace expwin::detail {

// Neumaier-compensated running sum; order-deterministic.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Composite Simpson weights for `panels` (even) equal panels over an interval
// of length `length`.
inline Eigen::ArrayXd simpson_weights(Eigen::Index panels, double length) {
  Eigen::ArrayXd w(panels + 1);
  const double h = length / double(panels);
  for (Eigen::Index i = 0; i <= panels; ++i) {
    w[i] = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
  }
  return w * (h / 3.0);
}

// Simpson's rule over uniformly spaced samples.  An odd panel count gets its
// last panel by the trapezoid rule.
inline double simpson_uniform(const Eigen::ArrayXd& y, double h) {
  const Eigen::Index panels = y.size() - 1;
  if (panels < 1) return 0.0;
  if (panels == 1) return 0.5 * h * (y[0] + y[1]);
  const Eigen::Index even = panels - (panels % 2);
  const Eigen::ArrayXd w = simpson_weights(even, h * double(even));
  CompensatedSum acc;
  for (Eigen::Index i = 0; i <= even; ++i) acc.add(w[i] * y[i]);
  if (even != panels) acc.add(0.5 * h * (y[even] + y[panels]));
  return acc.value();
}

}  // namespace expwin::detail

#endif  // EXPWIN_SRC_NUMERIC_HPP
