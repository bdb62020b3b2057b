#ifndef NPST_TABLE_HPP_
#define NPST_TABLE_HPP_

#include <cstddef>
#include <vector>

#include "sequence.hpp"

namespace npst {

// Row-major matrix of finite reals. Columns are samples unless a test
// documents otherwise. Immutable after construction.
class DataTable {
 public:
  DataTable(std::size_t rows, std::size_t columns, std::vector<double> cells);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * columns_ + c]; }
  const std::vector<double>& cells() const { return cells_; }

  std::vector<double> column(std::size_t c) const;
  std::vector<std::vector<double>> columns_as_samples() const;

 private:
  std::size_t rows_;
  std::size_t columns_;
  std::vector<double> cells_;
};

}  // namespace npst

#endif  // NPST_TABLE_HPP_
