#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gw/exact.hpp"

namespace gw {

/// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free elimination) of a square matrix.
BigInt determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithResult {
  IntMatrix d, u, v;
  std::vector<BigInt> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace gw
