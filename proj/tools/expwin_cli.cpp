// Command-line front end: list, sample, spectrum, metrics, table.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "expwin/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Window-function toolkit: exponential-kernel windows and spectral metrics"};
  app.require_subcommand(1);

  std::string out_path;

  std::string spec;
  Eigen::Index n_samples = 0;
  auto* list = app.add_subcommand("list", "List catalog windows, kernels and table rows");

  auto* sample = app.add_subcommand("sample", "Sample a window on k/n, CSV t,w");
  sample->add_option("spec", spec, "Window spec")->required();
  sample->add_option("--n", n_samples, "Number of samples")->required()->check(CLI::PositiveNumber);

  expwin::SpectrumOptions spectrum_options;
  std::string method = "fft";
  auto* spectrum = app.add_subcommand("spectrum", "Fourier magnitude, CSV f_hz,abs,db");
  spectrum->add_option("spec", spec, "Window spec")->required();
  spectrum->add_option("--fmax", spectrum_options.f_max, "Highest frequency in Hz")->capture_default_str();
  spectrum->add_option("--pad", spectrum_options.pad_factor, "Zero-padding factor; df = 1/pad Hz")
      ->capture_default_str();
  spectrum->add_option("--n", spectrum_options.n_samples, "Samples per record (fft method)")
      ->capture_default_str();
  spectrum->add_option("--method", method, "fft or quad")
      ->check(CLI::IsMember({"fft", "quad"}))
      ->capture_default_str();

  auto* metrics = app.add_subcommand("metrics", "Six spectral/temporal metrics as JSON");
  metrics->add_option("spec", spec, "Window spec")->required();

  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Reproduce the window comparison table");
  table->add_option("--format", format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();

  for (auto* sub : {list, sample, spectrum, metrics, table}) {
    sub->add_option("--out", out_path, "Write output to this file instead of standard output");
  }

  CLI11_PARSE(app, argc, argv);

  expwin::CommandOutput result;
  if (*list) {
    result = expwin::cmd_list();
  } else if (*sample) {
    result = expwin::cmd_sample(spec, n_samples);
  } else if (*spectrum) {
    spectrum_options.method =
        method == "quad" ? expwin::SpectrumMethod::Quadrature : expwin::SpectrumMethod::Fft;
    result = expwin::cmd_spectrum(spec, spectrum_options);
  } else if (*metrics) {
    result = expwin::cmd_metrics(spec);
  } else {
    result = expwin::cmd_table(format == "markdown" ? expwin::TableFormat::Markdown
                                                    : expwin::TableFormat::Csv);
  }

  // Parse and compute errors go to stderr for CSV commands; JSON errors stay
  // on the JSON channel.
  const bool to_stderr = result.exit_code != 0 && !*metrics && !*table;
  if (to_stderr) {
    std::cerr << result.text;
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 1;
    }
    file << result.text;
  }
  return result.exit_code;
}
