#include "expwin/table.hpp"

#include <numbers>

namespace expwin {

namespace {

WindowDef reconstruct(CatalogId id) { return ExpKernelWindow{WrappedWindowKernel{make_catalog(id)}}; }

WindowDef reconstruct(CatalogId id, double param) {
  return ExpKernelWindow{WrappedWindowKernel{make_catalog(id, param)}};
}

WindowDef sine_kernel(double c) { return ExpKernelWindow{ScaledSineKernel{c}}; }

WindowDef symmetric_polynomial(double n) { return ExpKernelWindow{PolynomialKernel{n, n}}; }

std::vector<TableRow> build_rows() {
  using G = TableGroup;
  const double kaiser_alpha = 8.0 / std::numbers::pi;
  return {
      {"Welch", G::Reconstruction, reconstruct(CatalogId::Welch)},
      {"Sine", G::Reconstruction, reconstruct(CatalogId::Sine)},
      {"sin(pi t)/2", G::Reconstruction, sine_kernel(0.5)},
      {"2sin(pi t)", G::Reconstruction, sine_kernel(2.0)},
      {"Hann", G::Reconstruction, reconstruct(CatalogId::Hann)},
      {"Kaiser(alpha=8/pi)", G::Reconstruction, reconstruct(CatalogId::Kaiser, kaiser_alpha)},
      {"Tukey(alpha=0.5)", G::Reconstruction, reconstruct(CatalogId::Tukey, 0.5)},
      {"n=0.1", G::Polynomial, symmetric_polynomial(0.1)},
      {"n=0.25", G::Polynomial, symmetric_polynomial(0.25)},
      {"n=0.5", G::Polynomial, symmetric_polynomial(0.5)},
      {"n=1.0", G::Polynomial, symmetric_polynomial(1.0)},
      {"n=1.5", G::Polynomial, symmetric_polynomial(1.5)},
      {"n=2.0", G::Polynomial, symmetric_polynomial(2.0)},
      {"Rectangular", G::Classical, make_catalog(CatalogId::Rectangular)},
      {"Triangular", G::Classical, make_catalog(CatalogId::Triangular)},
      {"Welch*", G::Classical, make_catalog(CatalogId::Welch)},
      {"Sine", G::Classical, make_catalog(CatalogId::Sine)},
      {"Hann", G::Classical, make_catalog(CatalogId::Hann)},
      {"Hamming", G::Classical, make_catalog(CatalogId::Hamming)},
      {"Gaussian*(sigma=0.5)", G::Classical, make_catalog(CatalogId::Gaussian, 0.5)},
      {"Cauchy-Lorentz*(gamma=0.5)", G::Classical, make_catalog(CatalogId::CauchyLorentz, 0.5)},
      {"Poisson*(tau=0.5)", G::Classical, make_catalog(CatalogId::Poisson, 0.5)},
      {"Kaiser(alpha=8/pi)", G::Classical, make_catalog(CatalogId::Kaiser, kaiser_alpha)},
      {"Tukey(alpha=0.3)", G::Classical, make_catalog(CatalogId::Tukey, 0.3)},
      {"Tukey(alpha=0.5)", G::Classical, make_catalog(CatalogId::Tukey, 0.5)},
      {"Tukey(alpha=0.7)", G::Classical, make_catalog(CatalogId::Tukey, 0.7)},
      {"Planck-taper(eps=0.15)", G::Classical, make_catalog(CatalogId::PlanckTaper, 0.15)},
      {"Planck-taper(eps=0.25)", G::Classical, make_catalog(CatalogId::PlanckTaper, 0.25)},
      {"Planck-taper(eps=0.35)", G::Classical, make_catalog(CatalogId::PlanckTaper, 0.35)},
  };
}

}  // namespace

const std::vector<TableRow>& comparison_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

std::vector<TableResult> compute_table(const MetricsConfig& config) {
  std::vector<TableResult> results;
  for (const TableRow& row : comparison_rows()) {
    TableResult r;
    r.row = &row;
    try {
      r.report = full_report(row.def, config);
    } catch (const WindowError& e) {
      r.error = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace expwin
