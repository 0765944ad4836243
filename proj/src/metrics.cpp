#include "expwin/metrics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "expwin/window_spec.hpp"
#include "numeric.hpp"

namespace expwin {

namespace {

constexpr double kHalfPowerLevel = std::numbers::sqrt2 / 2.0;
constexpr int kHalfWidthScan = 10000;
constexpr double kBisectionTolerance = 1e-13;

// Boundary of {W >= level} between lo and hi, where exactly one side is inside.
double bisect_crossing(const PreparedWindow& window, double lo, double hi) {
  const bool lo_inside = window(lo) >= kHalfPowerLevel;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if ((window(mid) >= kHalfPowerLevel) == lo_inside) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double main_lobe_width(const LobeSegmentation& seg) {
  if (seg.nulls.empty()) throw WindowError(ErrorKind::NoNullsFound, "no spectral null found");
  return seg.main_lobe_edge();
}

double energy_leakage(const PreparedWindow& window, double omega0_hz, double df_max, int panels) {
  if (!(omega0_hz > 0.0) || !(df_max > 0.0)) {
    throw WindowError(ErrorKind::BadParameter, "leakage needs a positive main-lobe edge and step");
  }
  Eigen::Index steps = Eigen::Index(std::ceil(omega0_hz / df_max));
  steps += steps % 2;
  const double df = omega0_hz / double(steps);
  const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(steps + 1, 0.0, double(steps)) * df;
  const Spectrum s = spectrum_quadrature(window, grid, panels);

  // int_{-W0}^{W0} |W^|^2 d omega / 2 pi = 2 int_0^{f0} |W^(f)|^2 df.
  const double main_lobe = 2.0 * detail::simpson_uniform(s.amplitudes.abs2(), df);
  const double total = time_energy(window, panels);
  return 100.0 * (1.0 - main_lobe / total);
}

double energy_leakage(const WindowDef& def, double omega0_hz, double df_max) {
  return energy_leakage(PreparedWindow(def), omega0_hz, df_max);
}

SidelobeShape first_sidelobe(const LobeSegmentation& seg) {
  if (seg.nulls.size() < 2 || seg.peaks.empty()) {
    throw WindowError(ErrorKind::InsufficientLobes,
                      "first sidelobe needs at least two nulls within the scan range");
  }
  return {seg.peaks.front().height_db, seg.nulls[1] - seg.nulls[0]};
}

double decay_scale(const LobeSegmentation& seg, double threshold_db, double f_max) {
  for (const SidelobePeak& peak : seg.peaks) {
    if (peak.frequency > f_max) break;
    if (peak.height_db < threshold_db) return peak.frequency;
  }
  std::ostringstream os;
  os << "sidelobes stay at or above " << threshold_db << " dB up to " << f_max << " Hz";
  throw WindowError(ErrorKind::NotConverged, os.str());
}

double half_width_numeric(const PreparedWindow& window) {
  double measure = 0.0;
  double entered = 0.0;
  bool inside = window(0.0) >= kHalfPowerLevel;
  double prev = 0.0;
  for (int i = 1; i <= kHalfWidthScan; ++i) {
    const double t = double(i) / kHalfWidthScan;
    const bool now_inside = window(t) >= kHalfPowerLevel;
    if (now_inside != inside) {
      const double crossing = bisect_crossing(window, prev, t);
      if (now_inside) {
        entered = crossing;
      } else {
        measure += crossing - entered;
      }
      inside = now_inside;
    }
    prev = t;
  }
  if (inside) measure += 1.0 - entered;
  return 10.0 * measure;
}

double half_width_numeric(const WindowDef& def) { return half_width_numeric(PreparedWindow(def)); }

double half_width_analytic(double n) {
  if (!(n > 0.0)) throw WindowError(ErrorKind::BadParameter, "exponent n must be positive");
  const double inner = 1.0 / (std::pow(4.0, n) + std::log(std::numbers::sqrt2));
  return 10.0 * std::sqrt(1.0 - 4.0 * std::pow(inner, 1.0 / n));
}

MetricsReport full_report(const WindowDef& def, const MetricsConfig& config) {
  try {
    const PreparedWindow window(def);
    const SampledWindow sampled = sample(window, config.n_samples);
    const Spectrum spectrum = spectrum_fft(sampled, config.pad_factor, config.f_max);
    const LobeSegmentation seg = segment_lobes(spectrum, config.f_max);

    MetricsReport r;
    r.omega0_hz = main_lobe_width(seg);
    r.leakage_pct = energy_leakage(window, r.omega0_hz, config.leakage_df, config.quadrature_panels);
    const SidelobeShape lobe = first_sidelobe(seg);
    r.sidelobe_db = lobe.height_db;
    r.sidelobe_width_hz = lobe.width_hz;
    r.decay_scale_hz = decay_scale(seg, config.threshold_db, config.f_max);
    r.half_width_0p1s = half_width_numeric(window);
    return r;
  } catch (const WindowError& e) {
    throw WindowError(e.kind(), format_window_spec(def) + ": " + e.what());
  }
}

}  // namespace expwin
