#ifndef EXPWIN_WINDOW_HPP
#define EXPWIN_WINDOW_HPP

#include <Eigen/Dense>
#include <cmath>
#include <concepts>
#include <optional>
#include <variant>

#include "expwin/catalog.hpp"
#include "expwin/kernels.hpp"

namespace expwin {

/// W(t) = exp(1/B_max - 1/B(t)) on (0,1), 0 elsewhere.
struct ExpKernelWindow {
  KernelSpec kernel;
  friend bool operator==(const ExpKernelWindow&, const ExpKernelWindow&) = default;
};

using WindowDef = std::variant<CatalogWindow, ExpKernelWindow>;

/// Exponents beyond this underflow exp() in double precision.
inline constexpr double kUnderflowExponent = 745.0;

void validate(const WindowDef& def);

namespace detail {

// 1/B(t) for a polynomial kernel, computed in log space so that B underflowing
// near an endpoint gives +inf rather than a division by zero.
template <typename Scalar>
Scalar polynomial_reciprocal(const PolynomialKernel& k, Scalar t) {
  using std::exp;
  using std::log;
  return exp(-(Scalar(k.m) * log(t) + Scalar(k.n) * log(Scalar(1) - t)));
}

}  // namespace detail

/// Exponential reconstruction for a kernel whose maximum is already known.
template <typename Scalar>
Scalar exp_window_value(const KernelSpec& kernel, const KernelPeak& peak, Scalar t) {
  using std::exp;
  if (!(t > Scalar(0) && t < Scalar(1))) return Scalar(0);

  Scalar reciprocal;
  if (const auto* poly = std::get_if<PolynomialKernel>(&kernel)) {
    reciprocal = detail::polynomial_reciprocal(*poly, t);
  } else {
    const Scalar b = kernel_value(kernel, t);
    if (b < Scalar(0) || b != b) detail::throw_non_positive_kernel(double(t), double(b));
    if (b == Scalar(0)) return Scalar(0);  // underflow next to an endpoint
    reciprocal = Scalar(1) / b;
  }
  const Scalar exponent = reciprocal - Scalar(1) / Scalar(peak.b_max);
  if (!(exponent <= Scalar(kUnderflowExponent))) return Scalar(0);
  if (exponent <= Scalar(0)) return Scalar(1);  // rounding at the maximum
  return exp(-exponent);
}

/// exp(1/B_max - 1/B(t)), locating B_max first.  Prefer PreparedWindow when
/// evaluating many points.
double exp_window_eval(const KernelSpec& kernel, double t);

/// A validated window with its normalization cached, ready for repeated
/// evaluation.
class PreparedWindow {
 public:
  explicit PreparedWindow(WindowDef def);

  const WindowDef& def() const { return def_; }
  const std::optional<KernelPeak>& peak() const { return peak_; }

  template <std::floating_point Scalar>
  Scalar operator()(Scalar t) const {
    if (const auto* cat = std::get_if<CatalogWindow>(&def_)) return catalog_eval(*cat, t);
    return exp_window_value(std::get<ExpKernelWindow>(def_).kernel, *peak_, t);
  }

  /// Coefficient-wise evaluation over an Eigen array of times.
  template <typename Derived>
  typename Derived::PlainObject operator()(const Eigen::ArrayBase<Derived>& t) const {
    using Scalar = typename Derived::Scalar;
    return t.unaryExpr([this](Scalar x) { return (*this)(x); });
  }

 private:
  WindowDef def_;
  std::optional<KernelPeak> peak_;
};

/// Window evaluation on the closed record; 0 outside.
double window_eval(const WindowDef& def, double t);

/// Uniform samples of one 1 s record: values[k] = W(k / n_samples).
struct SampledWindow {
  static constexpr double record_length = 1.0;

  Eigen::ArrayXd values;
  double dt = 0.0;
  // W(1); closes the record for trapezoidal integration of the spectrum.
  double end_value = 0.0;

  Eigen::Index n_samples() const { return values.size(); }
};

SampledWindow sample(const WindowDef& def, Eigen::Index n_samples);
SampledWindow sample(const PreparedWindow& window, Eigen::Index n_samples);

}  // namespace expwin

#endif  // EXPWIN_WINDOW_HPP
