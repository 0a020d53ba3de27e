#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lss/error.hpp"

namespace lss {

// Dense row-major 2-D raster.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{}) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw DataError("Grid: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

  T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Per-pixel edge response. Producers guarantee finite, non-negative values.
using EdgeMap = Grid<float>;

// 0 = background, nonzero = set.
using Mask = Grid<std::uint8_t>;

// Reference edge pixels used by the evaluation pathway.
struct GroundTruthEdges {
  Mask mask;
};

}  // namespace lss
