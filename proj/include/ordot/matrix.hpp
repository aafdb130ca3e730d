#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ordot {

/// Dense row-major matrix with bounds-unchecked access.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Mat() = default;
  Mat(int r, int c, T fill = T()) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }

  T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const Mat& other) const = default;
};

}  // namespace ordot
