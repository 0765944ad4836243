#ifndef EXPWIN_COMMANDS_HPP
#define EXPWIN_COMMANDS_HPP

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "expwin/spectrum.hpp"

namespace expwin {

// Implementations of the command-line subcommands.  Each returns the exact
// bytes to write plus the process exit code, so output is testable without
// spawning the tool.

struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

enum class SpectrumMethod { Fft, Quadrature };
enum class TableFormat { Csv, Markdown };

struct SpectrumOptions {
  double f_max = 50.0;
  SpectrumMethod method = SpectrumMethod::Fft;
  int pad_factor = kDefaultPadFactor;
  Eigen::Index n_samples = kDefaultSamples;
};

CommandOutput cmd_list();
CommandOutput cmd_sample(std::string_view spec, Eigen::Index n_samples);
CommandOutput cmd_spectrum(std::string_view spec, const SpectrumOptions& options);
CommandOutput cmd_metrics(std::string_view spec);
CommandOutput cmd_table(TableFormat format);

}  // namespace expwin

#endif  // EXPWIN_COMMANDS_HPP
