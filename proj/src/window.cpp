#include "expwin/window.hpp"

namespace expwin {

void validate(const WindowDef& def) {
  std::visit(
      [](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, CatalogWindow>) {
          validate(w);
        } else {
          validate(w.kernel);
        }
      },
      def);
}

double exp_window_eval(const KernelSpec& kernel, double t) {
  return exp_window_value(kernel, kernel_max(kernel), t);
}

PreparedWindow::PreparedWindow(WindowDef def) : def_(std::move(def)) {
  validate(def_);
  if (const auto* exp_def = std::get_if<ExpKernelWindow>(&def_)) {
    peak_ = kernel_max(exp_def->kernel);
  }
}

double window_eval(const WindowDef& def, double t) { return PreparedWindow(def)(t); }

SampledWindow sample(const PreparedWindow& window, Eigen::Index n_samples) {
  if (n_samples < 1) {
    throw WindowError(ErrorKind::BadParameter, "sample count must be positive");
  }
  SampledWindow out;
  out.dt = SampledWindow::record_length / double(n_samples);
  out.values = window(Eigen::ArrayXd::LinSpaced(n_samples, 0.0, double(n_samples - 1)) / double(n_samples));
  out.end_value = window(SampledWindow::record_length);
  return out;
}

SampledWindow sample(const WindowDef& def, Eigen::Index n_samples) {
  return sample(PreparedWindow(def), n_samples);
}

}  // namespace expwin
