#include "table.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace npst {

DataTable::DataTable(std::size_t rows, std::size_t columns, std::vector<double> cells)
    : rows_(rows), columns_(columns), cells_(std::move(cells)) {
  if (rows_ < 1 || columns_ < 1)
    throw data_error("table must have at least one row and one column");
  if (cells_.size() != rows_ * columns_)
    throw data_error("table cell count " + std::to_string(cells_.size()) +
                     " does not match " + std::to_string(rows_) + "x" +
                     std::to_string(columns_));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!std::isfinite(cells_[i]))
      throw data_error("table cell (" + std::to_string(i / columns_ + 1) + "," +
                       std::to_string(i % columns_ + 1) + ") is not finite");
  }
}

std::vector<double> DataTable::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<std::vector<double>> DataTable::columns_as_samples() const {
  std::vector<std::vector<double>> out;
  out.reserve(columns_);
  for (std::size_t c = 0; c < columns_; ++c) out.push_back(column(c));
  return out;
}

}  // namespace npst
