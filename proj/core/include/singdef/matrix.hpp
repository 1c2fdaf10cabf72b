#pragma once

#include <cstddef>
#include <vector>

#include "singdef/rational.hpp"

namespace singdef {

// Small dense matrix over the rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RationalMatrix&) const = default;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  std::size_t rank() const;
  Rational determinant() const;
  // Throws std::domain_error when singular.
  RationalMatrix inverse() const;
  // Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace singdef
