#include "expwin/commands.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

#include "expwin/metrics.hpp"
#include "expwin/table.hpp"
#include "expwin/window_spec.hpp"

namespace expwin {

namespace {

std::string sig(double value, int digits) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, digits);
  return std::string(buffer, ptr);
}

std::string fixed(double value, int decimals) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::fixed, decimals);
  return std::string(buffer, ptr);
}

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* group_name(TableGroup g) {
  switch (g) {
    case TableGroup::Reconstruction: return "reconstruction";
    case TableGroup::Polynomial: return "polynomial";
    case TableGroup::Classical: return "classical";
  }
  return "";
}

CommandOutput failure(const std::exception& e) { return {std::string("error: ") + e.what() + "\n", 1}; }

}  // namespace

CommandOutput cmd_list() {
  std::ostringstream os;
  os << "# catalog windows: id, parameter=default, formula, in comparison table\n";
  for (CatalogId id : kAllCatalogIds) {
    const CatalogInfo& info = catalog_info(id);
    os << info.name << '\t';
    if (info.param_name.empty()) {
      os << '-';
    } else {
      os << info.param_name << '=' << format_number(info.default_param);
    }
    os << '\t' << info.formula << '\t' << (info.in_table ? "table" : "extra") << '\n';
  }
  os << "# exponential reconstructions W(t) = exp(1/B_max - 1/B(t))\n";
  os << "exp:poly\tm,n\tB(t)=t^m(1-t)^n\ttable\n";
  os << "exp:sine\tc\tB(t)=c sin(pi t)\ttable\n";
  os << "exp:win\t<catalog spec>\tB(t)=catalog window\ttable\n";
  os << "# comparison table rows: group, label, spec\n";
  for (const TableRow& row : comparison_rows()) {
    os << group_name(row.group) << '\t' << row.label << '\t' << format_window_spec(row.def) << '\n';
  }
  return {os.str(), 0};
}

CommandOutput cmd_sample(std::string_view spec, Eigen::Index n_samples) {
  try {
    const SampledWindow w = sample(parse_window_spec(spec), n_samples);
    std::string out = "t,w\n";
    for (Eigen::Index k = 0; k < w.n_samples(); ++k) {
      out += sig(double(k) / double(n_samples), 12) + ',' + sig(w.values[k], 12) + '\n';
    }
    return {out, 0};
  } catch (const std::exception& e) {
    return failure(e);
  }
}

CommandOutput cmd_spectrum(std::string_view spec, const SpectrumOptions& options) {
  try {
    const PreparedWindow window(parse_window_spec(spec));
    Spectrum s;
    if (options.method == SpectrumMethod::Fft) {
      s = spectrum_fft(sample(window, options.n_samples), options.pad_factor, options.f_max);
    } else {
      if (options.pad_factor < 1) throw WindowError(ErrorKind::BadParameter, "pad factor must be positive");
      s = spectrum_quadrature(window, uniform_frequencies(1.0 / options.pad_factor, options.f_max));
    }
    std::string out = "f_hz,abs,db\n";
    for (Eigen::Index j = 0; j < s.size(); ++j) {
      out += sig(s.frequencies[j], 12) + ',' + sig(std::abs(s.amplitudes[j]), 12) + ',' +
             sig(s.db[j], 12) + '\n';
    }
    return {out, 0};
  } catch (const std::exception& e) {
    return failure(e);
  }
}

CommandOutput cmd_metrics(std::string_view spec) {
  nlohmann::ordered_json j;
  try {
    const WindowDef def = parse_window_spec(spec);
    const MetricsReport r = full_report(def);
    j["window"] = format_window_spec(def);
    j["omega0_hz"] = r.omega0_hz;
    j["leakage_pct"] = r.leakage_pct;
    j["sidelobe_db"] = r.sidelobe_db;
    j["sidelobe_width_hz"] = r.sidelobe_width_hz;
    j["decay_scale_hz"] = r.decay_scale_hz;
    j["half_width_0p1s"] = r.half_width_0p1s;
    return {j.dump() + "\n", 0};
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = e.what();
    return {err.dump() + "\n", 1};
  }
}

CommandOutput cmd_table(TableFormat format) {
  const std::vector<TableResult> results = compute_table();
  int exit_code = 0;
  std::ostringstream os;

  if (format == TableFormat::Csv) {
    os << "row,group,window,omega0_hz,leakage_pct,neg_sidelobe_db,sidelobe_width_hz,"
          "decay_scale_hz,half_width_0p1s,error\n";
  } else {
    os << "| window | spec | Omega0/2pi Hz | 1-I0 % | -W1 dB | Omega1/2pi Hz | DeltaOmega/2pi Hz | "
          "Delta/0.1s |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
  }

  for (const TableResult& r : results) {
    const std::string spec = format_window_spec(r.row->def);
    if (!r.report) exit_code = 1;
    if (format == TableFormat::Csv) {
      os << csv_quote(r.row->label) << ',' << group_name(r.row->group) << ',' << csv_quote(spec);
      if (r.report) {
        const MetricsReport& m = *r.report;
        for (double v : {m.omega0_hz, m.leakage_pct, -m.sidelobe_db, m.sidelobe_width_hz,
                         m.decay_scale_hz, m.half_width_0p1s}) {
          os << ',' << sig(v, 6);
        }
        os << ",\n";
      } else {
        os << ",,,,,," << ',' << csv_quote(r.error) << '\n';
      }
    } else {
      os << "| " << r.row->label << " | `" << spec << "` | ";
      if (r.report) {
        const MetricsReport& m = *r.report;
        os << fixed(m.omega0_hz, 2) << " | " << fixed(m.leakage_pct, 2) << " | "
           << fixed(-m.sidelobe_db, 1) << " | " << fixed(m.sidelobe_width_hz, 2) << " | "
           << fixed(m.decay_scale_hz, m.decay_scale_hz >= 10.0 ? 1 : 2) << " | " << fixed(m.half_width_0p1s, 2) << " |\n";
      } else {
        os << "error: " << r.error << " | | | | | |\n";
      }
    }
  }
  return {os.str(), exit_code};
}

}  // namespace expwin
