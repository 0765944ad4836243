#include <cmath>
#include <numbers>

#include "doctest.h"
#include "expwin/spectrum.hpp"

using namespace expwin;

namespace {

const double kPi = std::numbers::pi;

Spectrum default_fft(const WindowDef& def, double f_max) {
  return spectrum_fft(sample(def, kDefaultSamples), kDefaultPadFactor, f_max);
}

double value_at(const Spectrum& s, double f) {
  const auto j = Eigen::Index(std::lround(f / s.df));
  REQUIRE(std::abs(s.frequencies[j] - f) < 1e-12);
  return std::abs(s.amplitudes[j]);
}

}  // namespace

TEST_CASE("FFT spectrum examples") {
  const Spectrum rect = default_fft(make_catalog(CatalogId::Rectangular), 50);
  CHECK(rect.df == doctest::Approx(1.0 / 128));
  CHECK(std::abs(rect.amplitudes[0]) == doctest::Approx(1.0).epsilon(1e-12));
  // |sinc| at 0.5 Hz: 2/pi
  CHECK(std::abs(value_at(rect, 0.5) - 2 / kPi) < 1e-4);
  CHECK(rect.frequencies[rect.size() - 1] == doctest::Approx(50.0));

  const Spectrum hann = default_fft(make_catalog(CatalogId::Hann), 50);
  CHECK(std::abs(hann.amplitudes[0]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("spectrum dB is relative to DC") {
  const Spectrum s = default_fft(make_catalog(CatalogId::Triangular), 20);
  CHECK(s.db[0] == 0.0);
  CHECK(s.db.maxCoeff() <= 1e-12);
  CHECK(s.amplitudes.allFinite());
}

TEST_CASE("quadrature spectrum examples") {
  Eigen::ArrayXd f(3);
  f << 0.0, 1.0, 2.0;
  const Spectrum rect = spectrum_quadrature(make_catalog(CatalogId::Rectangular), f);
  CHECK(std::abs(rect.amplitudes[0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(rect.amplitudes[1]) < 1e-9);
  CHECK(std::abs(rect.amplitudes[2]) < 1e-9);

  const Spectrum sine = spectrum_quadrature(make_catalog(CatalogId::Sine), f);
  CHECK(std::abs(sine.amplitudes[0]) == doctest::Approx(2 / kPi).epsilon(1e-12));
}

TEST_CASE("quadrature matches closed forms") {
  // Hann: W^(f) = 0.5 e^{i pi f} sinc(f) / (1 - f^2), with |W^(0.5)| = 4/(3 pi)
  Eigen::ArrayXd f(2);
  f << 0.5, 2.5;
  const Spectrum hann = spectrum_quadrature(make_catalog(CatalogId::Hann), f);
  CHECK(std::abs(hann.amplitudes[0]) == doctest::Approx(4 / (3 * kPi)).epsilon(1e-12));
  const double sinc25 = std::sin(kPi * 2.5) / (kPi * 2.5);
  CHECK(std::abs(hann.amplitudes[1]) == doctest::Approx(std::abs(0.5 * sinc25 / (1 - 6.25))).epsilon(1e-10));
}

TEST_CASE("FFT and quadrature agree for an exponential window") {
  const WindowDef def = ExpKernelWindow{PolynomialKernel{1, 1}};
  const Spectrum fft = default_fft(def, 30);
  Eigen::ArrayXd f(7);
  f << 0.0, 0.5, 1.25, 2.625, 7.0, 15.5, 29.0;
  const Spectrum quad = spectrum_quadrature(def, f);
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    const auto k = Eigen::Index(std::lround(f[j] * 128));
    CHECK(std::abs(fft.amplitudes[k] - quad.amplitudes[j]) < 1e-6);
  }
}

TEST_CASE("FFT and quadrature agree for every catalog window") {
  for (CatalogId id : kAllCatalogIds) {
    const WindowDef def = make_catalog(id);
    const Spectrum fft = default_fft(def, 50);
    Eigen::ArrayXd f = Eigen::ArrayXd::LinSpaced(51, 0.0, 50.0);
    const Spectrum quad = spectrum_quadrature(def, f);
    const double scale = std::abs(quad.amplitudes[0]);
    for (Eigen::Index j = 0; j < f.size(); ++j) {
      CHECK(std::abs(fft.amplitudes[j * 128] - quad.amplitudes[j]) < 1e-4 * scale);
    }
  }
}

TEST_CASE("spectrum of a real window is conjugate symmetric") {
  const PreparedWindow w(make_catalog(CatalogId::Kaiser));
  Eigen::ArrayXd pos(4), neg(4);
  pos << 0.3, 1.7, 4.2, 9.9;
  neg = -pos;
  // The grid routine expects non-negative frequencies; integrate the mirror
  // by conjugating the window's transform directly.
  const Spectrum s = spectrum_quadrature(w, pos);
  for (Eigen::Index j = 0; j < pos.size(); ++j) {
    std::complex<double> mirror = 0.0;
    const int n = 1 << 14;
    for (int k = 0; k <= n; ++k) {
      const double t = double(k) / n;
      const double weight = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      mirror += weight * w(t) * std::polar(1.0, 2 * kPi * neg[j] * t);
    }
    mirror /= 3.0 * n;
    CHECK(std::abs(mirror - std::conj(s.amplitudes[j])) < 1e-9);
  }
}

TEST_CASE("lobe segmentation of the rectangular window") {
  const Spectrum s = default_fft(make_catalog(CatalogId::Rectangular), 10);
  const LobeSegmentation seg = segment_lobes(s, 10);
  REQUIRE(seg.nulls.size() >= 5);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(seg.nulls[k] - (k + 1)) < 0.005);
  CHECK(seg.main_lobe_edge() == doctest::Approx(1.0).epsilon(0.005));
  REQUIRE(!seg.peaks.empty());
  // First sinc sidelobe, tan(pi f) = pi f: f = 1.43029665, -13.2614589 dB
  CHECK(std::abs(seg.peaks[0].frequency - 1.43029665312420) < 0.01);
  CHECK(std::abs(seg.peaks[0].height_db + 13.2614588840483) < 0.1);
  CHECK(seg.peaks.size() + 1 == seg.nulls.size());
}

TEST_CASE("lobe segmentation of Hann") {
  const Spectrum s = default_fft(make_catalog(CatalogId::Hann), 20);
  const LobeSegmentation seg = segment_lobes(s, 20);
  CHECK(std::abs(seg.main_lobe_edge() - 2.0) < 0.01);
  CHECK(std::abs(seg.nulls[1] - 3.0) < 0.01);
  CHECK(std::abs(seg.peaks[0].height_db + 31.47) < 0.1);
}

TEST_CASE("segmentation preconditions") {
  const Spectrum coarse = spectrum_fft(sample(make_catalog(CatalogId::Hann), 64), 2, 10);
  CHECK_THROWS_AS(segment_lobes(coarse, 10), WindowError);

  const Spectrum s = default_fft(make_catalog(CatalogId::Hann), 1.5);
  try {
    segment_lobes(s, 1.5);
    FAIL("expected throw");
  } catch (const WindowError& e) {
    CHECK(e.kind() == ErrorKind::NoNullsFound);
  }
}

TEST_CASE("FFT preconditions") {
  const SampledWindow w = sample(make_catalog(CatalogId::Hann), 64);
  CHECK_THROWS_AS(spectrum_fft(w, 1, 10), WindowError);
  CHECK_THROWS_AS(spectrum_fft(w, 128, -1), WindowError);
}

TEST_CASE("apply_window examples") {
  const Eigen::ArrayXd ones = Eigen::ArrayXd::Ones(8);
  const Eigen::ArrayXd r = apply_window(ones, make_catalog(CatalogId::Rectangular));
  CHECK((r == 1.0).all());

  const Eigen::ArrayXd h = apply_window(ones, make_catalog(CatalogId::Hann));
  const SampledWindow hs = sample(make_catalog(CatalogId::Hann), 8);
  CHECK((h == hs.values).all());
}

TEST_CASE("windowed cosine keeps its tone and the window's main lobe") {
  const Eigen::Index n = 1024;
  const Eigen::ArrayXd t = Eigen::ArrayXd::LinSpaced(n, 0, double(n - 1)) / double(n);
  const Eigen::ArrayXd x = (2 * kPi * 10 * t).cos();
  SampledWindow w;
  w.values = apply_window(x, make_catalog(CatalogId::Hann));
  w.dt = 1.0 / double(n);
  w.end_value = 0.0;
  const Spectrum s = spectrum_fft(w, 128, 20);
  Eigen::Index peak = 0;
  s.db.maxCoeff(&peak);
  CHECK(std::abs(s.frequencies[peak] - 10.0) < 0.05);

  // Nulls of the shifted Hann lobe.
  auto local_min_near = [&](double f0) {
    const auto j0 = Eigen::Index(std::lround((f0 - 0.5) / s.df));
    const auto len = Eigen::Index(std::lround(1.0 / s.df));
    Eigen::Index k = 0;
    s.db.segment(j0, len).minCoeff(&k);
    return s.frequencies[j0 + k];
  };
  CHECK(std::abs(local_min_near(8.0) - 8.0) < 0.05);
  CHECK(std::abs(local_min_near(12.0) - 12.0) < 0.05);
}

TEST_CASE("Parseval ratio approaches one") {
  const PreparedWindow w(make_catalog(CatalogId::Hann));
  const double energy = time_energy(w);
  CHECK(energy == doctest::Approx(0.375).epsilon(1e-12));
  const Spectrum s = spectrum_fft(sample(w, kDefaultSamples), kDefaultPadFactor, 500);
  CHECK(std::abs(parseval_ratio(s, energy) - 1.0) < 1e-4);
}

TEST_CASE("uniform frequency grids") {
  const Eigen::ArrayXd f = uniform_frequencies(0.25, 1.0);
  REQUIRE(f.size() == 5);
  CHECK(f[4] == 1.0);
  CHECK(uniform_frequencies(0.3, 1.0).size() == 4);
}
