#include "expwin/spectrum.hpp"

#include <unsupported/Eigen/FFT>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "numeric.hpp"

namespace expwin {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::Index next_pow2(Eigen::Index n) {
  Eigen::Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fill_db(Spectrum& s, double reference) {
  s.db.resize(s.amplitudes.size());
  for (Eigen::Index j = 0; j < s.amplitudes.size(); ++j) {
    s.db[j] = 20.0 * std::log10(std::abs(s.amplitudes[j]) / reference);
  }
}

// sum_i w_i W_i exp(2 pi i f t_i) over Simpson nodes t_i = i / panels.  The
// phasor is advanced by multiplication and re-anchored every kResync nodes.
cd simpson_fourier(const Eigen::ArrayXd& weighted, double f) {
  constexpr Eigen::Index kResync = 256;
  const Eigen::Index nodes = weighted.size();
  const double h = 1.0 / double(nodes - 1);
  const cd step = std::polar(1.0, kTwoPi * f * h);
  detail::CompensatedSum re, im;
  cd phasor(1.0, 0.0);
  for (Eigen::Index i = 0; i < nodes; ++i) {
    if (i % kResync == 0) phasor = std::polar(1.0, kTwoPi * f * double(i) * h);
    const double v = weighted[i];
    re.add(v * phasor.real());
    im.add(v * phasor.imag());
    phasor *= step;
  }
  return {re.value(), im.value()};
}

double parabolic_offset(double left, double mid, double right) {
  const double denom = left - 2.0 * mid + right;
  if (denom == 0.0 || !std::isfinite(denom)) return 0.0;
  return std::clamp(0.5 * (left - right) / denom, -0.5, 0.5);
}

}  // namespace

Eigen::ArrayXd uniform_frequencies(double df, double f_max) {
  const auto count = Eigen::Index(std::floor(f_max / df + 1e-9)) + 1;
  return Eigen::ArrayXd::LinSpaced(count, 0.0, double(count - 1)) * df;
}

Spectrum spectrum_fft(const SampledWindow& w, int pad_factor, double f_max) {
  if (pad_factor < 2) throw WindowError(ErrorKind::BadParameter, "pad factor must be >= 2");
  if (!(f_max >= 0.0)) throw WindowError(ErrorKind::BadParameter, "f_max must be non-negative");

  const Eigen::Index n = w.n_samples();
  const Eigen::Index length = next_pow2(n * pad_factor);

  Eigen::VectorXd padded = Eigen::VectorXd::Zero(length);
  padded.head(n) = w.values.matrix();
  Eigen::VectorXcd transformed;
  Eigen::FFT<double> fft;
  fft.fwd(transformed, padded);

  Spectrum s;
  s.df = 1.0 / (double(length) * w.dt);
  const Eigen::Index bins =
      std::min<Eigen::Index>(length / 2 + 1, Eigen::Index(std::floor(f_max / s.df + 1e-9)) + 1);
  s.frequencies = Eigen::ArrayXd::LinSpaced(bins, 0.0, double(bins - 1)) * s.df;
  s.amplitudes.resize(bins);

  // The forward FFT uses exp(-i...), the transform here exp(+i...): conjugate.
  const double w0 = w.values.size() > 0 ? w.values[0] : 0.0;
  for (Eigen::Index j = 0; j < bins; ++j) {
    const cd closing = w.end_value * std::polar(1.0, kTwoPi * s.frequencies[j]);
    s.amplitudes[j] = w.dt * std::conj(transformed[j]) - 0.5 * w.dt * (w0 - closing);
  }
  fill_db(s, std::abs(s.amplitudes[0]));
  return s;
}

Spectrum spectrum_quadrature(const PreparedWindow& window, const Eigen::ArrayXd& f_grid,
                             int panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw WindowError(ErrorKind::BadParameter, "Simpson panel count must be even and >= 2");
  }
  const Eigen::ArrayXd t = Eigen::ArrayXd::LinSpaced(panels + 1, 0.0, double(panels)) / double(panels);
  const Eigen::ArrayXd weighted = detail::simpson_weights(panels, 1.0) * window(t);

  Spectrum s;
  s.frequencies = f_grid;
  s.df = f_grid.size() > 1 ? f_grid[1] - f_grid[0] : 0.0;
  for (Eigen::Index j = 2; j < f_grid.size() && s.df != 0.0; ++j) {
    if (std::abs((f_grid[j] - f_grid[j - 1]) - s.df) > 1e-9 * std::max(1.0, s.df)) s.df = 0.0;
  }
  s.amplitudes.resize(f_grid.size());
  for (Eigen::Index j = 0; j < f_grid.size(); ++j) {
    s.amplitudes[j] = simpson_fourier(weighted, f_grid[j]);
  }
  const double reference =
      (f_grid.size() > 0 && f_grid[0] == 0.0) ? std::abs(s.amplitudes[0]) : std::abs(simpson_fourier(weighted, 0.0));
  fill_db(s, reference);
  return s;
}

Spectrum spectrum_quadrature(const WindowDef& def, const Eigen::ArrayXd& f_grid, int panels) {
  return spectrum_quadrature(PreparedWindow(def), f_grid, panels);
}

LobeSegmentation segment_lobes(const Spectrum& s, double f_max) {
  if (!(s.df > 0.0 && s.df <= 0.02)) {
    throw WindowError(ErrorKind::BadParameter,
                      "lobe segmentation needs a uniform grid with df <= 0.02 Hz");
  }
  Eigen::Index last = s.size() - 1;
  while (last > 0 && s.frequencies[last] > f_max) --last;

  // Minima are located on |W^|^2, which is smooth through a simple zero.
  const Eigen::ArrayXd power = s.amplitudes.abs2();

  LobeSegmentation seg;
  std::vector<Eigen::Index> minima;
  for (Eigen::Index j = 1; j < last; ++j) {
    if (power[j] < power[j - 1] && power[j] <= power[j + 1]) {
      minima.push_back(j);
      const double offset = parabolic_offset(power[j - 1], power[j], power[j + 1]);
      seg.nulls.push_back(s.frequencies[j] + offset * s.df);
    }
  }
  if (seg.nulls.empty()) {
    throw WindowError(ErrorKind::NoNullsFound, "no spectral null below f_max");
  }

  for (std::size_t k = 0; k + 1 < minima.size(); ++k) {
    Eigen::Index best = minima[k] + 1;
    for (Eigen::Index j = best + 1; j < minima[k + 1]; ++j) {
      if (s.db[j] > s.db[best]) best = j;
    }
    const double left = s.db[best - 1], mid = s.db[best], right = s.db[best + 1];
    const double offset = parabolic_offset(left, mid, right);
    seg.peaks.push_back({s.frequencies[best] + offset * s.df, mid - 0.25 * (left - right) * offset});
  }
  return seg;
}

Eigen::ArrayXd apply_window(const Eigen::ArrayXd& signal, const WindowDef& def) {
  return signal * sample(def, signal.size()).values;
}

double time_energy(const PreparedWindow& window, int panels) {
  const Eigen::ArrayXd t = Eigen::ArrayXd::LinSpaced(panels + 1, 0.0, double(panels)) / double(panels);
  const Eigen::ArrayXd values = window(t);
  return detail::simpson_uniform(values.square(), 1.0 / double(panels));
}

double parseval_ratio(const Spectrum& s, double time_energy) {
  if (!(s.df > 0.0)) throw WindowError(ErrorKind::BadParameter, "Parseval ratio needs a uniform grid");
  // |W^(-f)| = |W^(f)| for real windows; integrate the positive half twice.
  // With omega = 2 pi f the 2 pi of d omega cancels the normalization.
  return 2.0 * detail::simpson_uniform(s.amplitudes.abs2(), s.df) / time_energy;
}

}  // namespace expwin
