#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace evtol {

// Row-major dense matrix of doubles. Small helper shared by the domain types;
// the policy network uses its own autodiff tensors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return v_.empty(); }

  double& at(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

// 3-D grid indexed (i, j, k); used for hourly demand/fare tables.
class Grid3 {
 public:
  Grid3() = default;
  Grid3(int d0, int d1, int d2, double fill = 0.0)
      : d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<std::size_t>(d0) * d1 * d2, fill) {}

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }

  double& at(int i, int j, int k) {
    return v_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
  }
  double at(int i, int j, int k) const {
    return v_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
  }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

 private:
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<double> v_;
};

}  // namespace evtol
