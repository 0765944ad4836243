#ifndef EXPWIN_METRICS_HPP
#define EXPWIN_METRICS_HPP

#include <Eigen/Dense>

#include "expwin/spectrum.hpp"
#include "expwin/window.hpp"

namespace expwin {

/// The six figures of merit of one window.  Frequencies are omega / 2 pi in
/// Hz; the half width is in units of 0.1 s.
struct MetricsReport {
  double omega0_hz = 0.0;          // half main-lobe width (first null)
  double leakage_pct = 0.0;        // 100 (1 - I0)
  double sidelobe_db = 0.0;        // first sidelobe height, negative
  double sidelobe_width_hz = 0.0;  // distance between the first two nulls
  double decay_scale_hz = 0.0;     // first sidelobe peak below the threshold
  double half_width_0p1s = 0.0;    // measure of {W >= sqrt(2)/2}, x10
};

struct MetricsConfig {
  Eigen::Index n_samples = kDefaultSamples;
  int pad_factor = kDefaultPadFactor;
  double f_max = 500.0;
  double threshold_db = -60.0;
  double leakage_df = 0.005;
  int quadrature_panels = kDefaultQuadraturePanels;
};

struct SidelobeShape {
  double height_db = 0.0;
  double width_hz = 0.0;
};

double main_lobe_width(const LobeSegmentation& seg);

/// 100 (1 - I0), I0 = int_{-W0}^{W0} |W^|^2 d omega / (2 pi int_0^1 W^2 dt),
/// both integrals by composite Simpson; the spectrum is evaluated by direct
/// quadrature on a grid of spacing <= df_max ending exactly at omega0.
double energy_leakage(const PreparedWindow& window, double omega0_hz, double df_max = 0.005,
                      int panels = kDefaultQuadraturePanels);
double energy_leakage(const WindowDef& def, double omega0_hz, double df_max = 0.005);

SidelobeShape first_sidelobe(const LobeSegmentation& seg);

/// Frequency of the first sidelobe peak lying below `threshold_db`.  Throws
/// NotConverged if no peak below f_max gets there.
double decay_scale(const LobeSegmentation& seg, double threshold_db = -60.0, double f_max = 500.0);

/// 10 x the length of {t in (0,1) : W(t) >= sqrt(2)/2}, crossings by bisection.
double half_width_numeric(const PreparedWindow& window);
double half_width_numeric(const WindowDef& def);

/// Closed-form half width of the symmetric polynomial window of exponent n,
/// 10 sqrt(1 - 4 (1 / (4^n + ln sqrt 2))^(1/n)).
double half_width_analytic(double n);

MetricsReport full_report(const WindowDef& def, const MetricsConfig& config = {});

}  // namespace expwin

#endif  // EXPWIN_METRICS_HPP
