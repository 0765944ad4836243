#ifndef EXPWIN_KERNELS_HPP
#define EXPWIN_KERNELS_HPP

#include <cmath>
#include <numbers>
#include <type_traits>
#include <variant>

#include "expwin/catalog.hpp"
#include "expwin/errors.hpp"

namespace expwin {

/// B(t) = t^m (1-t)^n.
struct PolynomialKernel {
  double m = 1.0;
  double n = 1.0;
  friend bool operator==(const PolynomialKernel&, const PolynomialKernel&) = default;
};

/// B(t) = c sin(pi t).
struct ScaledSineKernel {
  double c = 1.0;
  friend bool operator==(const ScaledSineKernel&, const ScaledSineKernel&) = default;
};

/// B(t) = W(t) of a catalog window.
struct WrappedWindowKernel {
  CatalogWindow window;
  friend bool operator==(const WrappedWindowKernel&, const WrappedWindowKernel&) = default;
};

using KernelSpec = std::variant<PolynomialKernel, ScaledSineKernel, WrappedWindowKernel>;

/// Location and value of the kernel maximum on (0,1).
struct KernelPeak {
  double t_star = 0.5;
  double b_max = 0.0;
};

/// Checks parameter signs (and, for wrapped windows, the catalog ranges).
void validate(const KernelSpec& spec);

namespace detail {

// x^p for x >= 0 with 0^p mapped to its limit 0 (p > 0).
template <typename Scalar>
Scalar limit_pow(Scalar x, Scalar p) {
  using std::pow;
  if (x <= Scalar(0)) return Scalar(0);
  return pow(x, p);
}

[[noreturn]] void throw_non_positive_kernel(double t, double value);

}  // namespace detail

/// Raw kernel value without interior positivity checks.  At t = 0 and t = 1
/// this returns the one-sided limit.
template <typename Scalar>
Scalar kernel_value(const KernelSpec& spec, Scalar t) {
  using std::sin;
  return std::visit(
      [t](const auto& k) -> Scalar {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PolynomialKernel>) {
          return detail::limit_pow(t, Scalar(k.m)) * detail::limit_pow(Scalar(1) - t, Scalar(k.n));
        } else if constexpr (std::is_same_v<K, ScaledSineKernel>) {
          if (t <= Scalar(0) || t >= Scalar(1)) return Scalar(0);
          return Scalar(k.c) * sin(std::numbers::pi_v<Scalar> * t);
        } else {
          return catalog_eval(k.window, t);
        }
      },
      spec);
}

/// B(t) for t in [0,1].  Throws WindowError(InvalidKernel) if B(t) <= 0 at an
/// interior point.
template <typename Scalar>
Scalar kernel_eval(const KernelSpec& spec, Scalar t) {
  const Scalar b = kernel_value(spec, t);
  const bool interior = t > Scalar(0) && t < Scalar(1);
  if (interior && !(b > Scalar(0))) {
    detail::throw_non_positive_kernel(static_cast<double>(t), static_cast<double>(b));
  }
  return b;
}

/// Maximum of B on (0,1).  Closed form t* = m/(m+n) for polynomial kernels;
/// otherwise a 10^4-point grid scan refined by golden-section search.
KernelPeak kernel_max(const KernelSpec& spec);

}  // namespace expwin

#endif  // EXPWIN_KERNELS_HPP
