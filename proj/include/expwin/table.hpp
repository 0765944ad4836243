#ifndef EXPWIN_TABLE_HPP
#define EXPWIN_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "expwin/metrics.hpp"
#include "expwin/window.hpp"

namespace expwin {

enum class TableGroup { Reconstruction, Polynomial, Classical };

/// One row of the window comparison table.
struct TableRow {
  std::string label;
  TableGroup group;
  WindowDef def;
};

/// The comparison rows in table order: 7 exponential reconstructions of
/// existing windows, 6 symmetric polynomial exponents, and 16 classical rows
/// (Tukey and Planck-taper each expanded to three parameter values).
const std::vector<TableRow>& comparison_rows();

struct TableResult {
  const TableRow* row = nullptr;
  std::optional<MetricsReport> report;
  std::string error;  // set when report is empty
};

std::vector<TableResult> compute_table(const MetricsConfig& config = {});

}  // namespace expwin

#endif  // EXPWIN_TABLE_HPP
