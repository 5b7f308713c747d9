#include "erid/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace erid {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: empty shape");
  if (!std::isfinite(fill)) throw std::invalid_argument("Matrix: non-finite fill");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("Matrix: empty shape");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("Matrix: non-finite entry");
      data_.push_back(v);
    }
  }
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::min_entry() const { return *std::min_element(data_.begin(), data_.end()); }

double Matrix::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

}  // namespace erid
