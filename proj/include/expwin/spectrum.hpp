#ifndef EXPWIN_SPECTRUM_HPP
#define EXPWIN_SPECTRUM_HPP

#include <Eigen/Dense>
#include <vector>

#include "expwin/window.hpp"

namespace expwin {

inline constexpr Eigen::Index kDefaultSamples = 8192;
inline constexpr int kDefaultPadFactor = 128;
inline constexpr int kDefaultQuadraturePanels = 1 << 15;

/// Fourier transform W^(f) = int_0^1 exp(2 pi i f t) W(t) dt on a frequency
/// grid, with the magnitude in dB relative to |W^(0)|.
struct Spectrum {
  Eigen::ArrayXd frequencies;  // Hz
  Eigen::ArrayXcd amplitudes;
  Eigen::ArrayXd db;
  double df = 0.0;  // grid spacing, 0 if the grid is not uniform

  Eigen::Index size() const { return frequencies.size(); }
};

/// Zero-padded FFT of the sampled record.  The record is padded to
/// n_samples * pad_factor (rounded up to a power of two) samples, so
/// df = 1 / pad_factor Hz in the default configuration.  Amplitudes are the
/// trapezoidal rule over [0,1], i.e. dt times the DFT plus an endpoint
/// correction using `end_value`.  Bins above f_max are dropped.
Spectrum spectrum_fft(const SampledWindow& w, int pad_factor, double f_max);

/// Direct composite-Simpson evaluation of the Fourier integral at each
/// frequency of `f_grid` (sorted, non-negative).  Independent of the FFT path.
Spectrum spectrum_quadrature(const PreparedWindow& window, const Eigen::ArrayXd& f_grid,
                             int panels = kDefaultQuadraturePanels);
Spectrum spectrum_quadrature(const WindowDef& def, const Eigen::ArrayXd& f_grid,
                             int panels = kDefaultQuadraturePanels);

/// 0, df, 2 df, ... up to and including f_max (within rounding).
Eigen::ArrayXd uniform_frequencies(double df, double f_max);

struct SidelobePeak {
  double frequency = 0.0;  // Hz
  double height_db = 0.0;
};

/// Nulls (local minima of |W^|) and the sidelobe peak between each pair of
/// consecutive nulls on the positive-frequency axis.
struct LobeSegmentation {
  std::vector<double> nulls;
  std::vector<SidelobePeak> peaks;

  double main_lobe_edge() const { return nulls.front(); }
};

/// Requires a uniform grid with df <= 0.02 Hz.  Minima and maxima are refined
/// by 3-point parabolic interpolation.  Throws NoNullsFound when |W^| has no
/// local minimum below f_max.
LobeSegmentation segment_lobes(const Spectrum& s, double f_max);

/// Pointwise product of a signal sampled at t_k = k/len with the window.
Eigen::ArrayXd apply_window(const Eigen::ArrayXd& signal, const WindowDef& def);

/// int_0^1 W(t)^2 dt by composite Simpson.
double time_energy(const PreparedWindow& window, int panels = kDefaultQuadraturePanels);

/// (int_{-F}^{F} |W^|^2 d omega) / (2 pi int_0^1 W^2 dt) with F the top of the
/// spectrum's grid.  Tends to 1 as F grows.
double parseval_ratio(const Spectrum& s, double time_energy);

}  // namespace expwin

#endif  // EXPWIN_SPECTRUM_HPP
