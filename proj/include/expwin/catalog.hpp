#ifndef EXPWIN_CATALOG_HPP
#define EXPWIN_CATALOG_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string_view>

#include "expwin/errors.hpp"

namespace expwin {

// Classical windows on the unit record. Ordering follows the comparison table,
// with the exponential window of Avci & Nacaroglu appended as an extra.
enum class CatalogId {
  Rectangular,
  Triangular,
  Welch,
  Sine,
  Hann,
  Hamming,
  Gaussian,
  CauchyLorentz,
  Poisson,
  Kaiser,
  Tukey,
  PlanckTaper,
  AvciExp,
};

inline constexpr std::array<CatalogId, 13> kAllCatalogIds = {
    CatalogId::Rectangular, CatalogId::Triangular,    CatalogId::Welch,
    CatalogId::Sine,        CatalogId::Hann,          CatalogId::Hamming,
    CatalogId::Gaussian,    CatalogId::CauchyLorentz, CatalogId::Poisson,
    CatalogId::Kaiser,      CatalogId::Tukey,         CatalogId::PlanckTaper,
    CatalogId::AvciExp};

struct CatalogInfo {
  std::string_view name;        // grammar id, e.g. "cauchy_lorentz"
  std::string_view param_name;  // empty when the window has no parameter
  double default_param;
  std::string_view formula;
  bool vanishes_at_endpoints;
  bool in_table;
};

const CatalogInfo& catalog_info(CatalogId id);
std::optional<CatalogId> catalog_id_from_name(std::string_view name);

/// A catalog window together with its (single) shape parameter.  `param` is
/// ignored for windows without one and is kept at 0 so equality is exact.
struct CatalogWindow {
  CatalogId id = CatalogId::Rectangular;
  double param = 0.0;

  friend bool operator==(const CatalogWindow&, const CatalogWindow&) = default;
};

/// Catalog window with its default parameter.
CatalogWindow make_catalog(CatalogId id);
CatalogWindow make_catalog(CatalogId id, double param);

/// Throws WindowError(BadParameter) when `param` is outside the documented range.
void validate(const CatalogWindow& window);

/// Modified Bessel function of the first kind, order zero, by its power series.
template <typename Scalar>
Scalar bessel_i0(Scalar x) {
  const Scalar half = x / Scalar(2);
  const Scalar q = half * half;
  Scalar term(1);
  Scalar sum(1);
  for (int k = 1; k < 500; ++k) {
    term *= q / Scalar(k * k);
    sum += term;
    if (term < std::numeric_limits<Scalar>::epsilon() * Scalar(0.5) * sum) break;
  }
  return sum;
}

namespace detail {

template <typename Scalar>
Scalar planck_rise(Scalar x, Scalar eps) {
  using std::exp;
  if (x <= Scalar(0)) return Scalar(0);
  if (x >= eps) return Scalar(1);
  const Scalar z = eps / x + eps / (x - eps);
  if (z > Scalar(700)) return Scalar(0);
  return Scalar(1) / (Scalar(1) + exp(z));
}

template <typename Scalar>
Scalar tukey_rise(Scalar x, Scalar alpha) {
  using std::sin;
  if (x <= Scalar(0)) return Scalar(0);
  if (x >= alpha / Scalar(2)) return Scalar(1);
  const Scalar s = sin(std::numbers::pi_v<Scalar> * x / alpha);
  return s * s;
}

}  // namespace detail

/// Catalog formula evaluated on the closed record [0,1]; 0 outside it.  No
/// parameter validation is done here, see validate().
template <typename Scalar>
Scalar catalog_eval(const CatalogWindow& window, Scalar t) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  if (!(t >= Scalar(0) && t <= Scalar(1))) return Scalar(0);

  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar p = static_cast<Scalar>(window.param);
  const Scalar centered = t - Scalar(0.5);

  switch (window.id) {
    case CatalogId::Rectangular:
      return Scalar(1);
    case CatalogId::Triangular:
      return Scalar(1) - Scalar(2) * abs(centered);
    case CatalogId::Welch:
      return Scalar(4) * t * (Scalar(1) - t);
    case CatalogId::Sine:
      return sin(pi * t);
    case CatalogId::Hann: {
      // 0.5 - 0.5 cos(2 pi t), written without cancellation near the ends
      const Scalar s = sin(pi * t);
      return s * s;
    }
    case CatalogId::Hamming:
      return Scalar(0.54) - Scalar(0.46) * cos(Scalar(2) * pi * t);
    case CatalogId::Gaussian: {
      const Scalar u = centered / p;
      return exp(Scalar(-0.5) * u * u);
    }
    case CatalogId::CauchyLorentz:
      return p * p / (centered * centered + p * p);
    case CatalogId::Poisson:
      return exp(-abs(centered) / p);
    case CatalogId::Kaiser: {
      const Scalar beta = pi * p;
      const Scalar s = Scalar(2) * t - Scalar(1);
      const Scalar r = Scalar(1) - s * s;
      return bessel_i0(beta * sqrt(r > Scalar(0) ? r : Scalar(0))) / bessel_i0(beta);
    }
    case CatalogId::Tukey:
      return t < Scalar(0.5) ? detail::tukey_rise(t, p) : detail::tukey_rise(Scalar(1) - t, p);
    case CatalogId::PlanckTaper:
      return t < Scalar(0.5) ? detail::planck_rise(t, p) : detail::planck_rise(Scalar(1) - t, p);
    case CatalogId::AvciExp: {
      const Scalar r = Scalar(1) - Scalar(4) * centered * centered;
      return exp(p * (sqrt(r > Scalar(0) ? r : Scalar(0)) - Scalar(1)));
    }
  }
  return Scalar(0);
}

}  // namespace expwin

#endif  // EXPWIN_CATALOG_HPP
