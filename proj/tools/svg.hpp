#pragma once

#include <string>
#include <vector>

namespace fvlab::svg {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
};

/// Scatter plot of log10|y| against log10 x.  Non-finite or zero points
/// are dropped.
std::string loglog_scatter(const std::vector<Series>& series, const std::string& title);

struct Cell {
  int col;
  int row;
  std::string label;
  std::string color;
};

/// Labelled coloured squares on an integer grid.
std::string tile_grid(const std::vector<Cell>& cells, const std::vector<std::string>& col_labels,
                      const std::vector<std::string>& row_labels, const std::string& title);

}  // namespace fvlab::svg
