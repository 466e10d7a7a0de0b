#pragma once

#include "relhom/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace relhom {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix column(std::span<const Integer> entries);
  static IntMatrix hconcat(const IntMatrix& left, const IntMatrix& right);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const Integer> values);

  IntMatrix select_cols(std::span<const std::size_t> indices) const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  IntMatrix transpose() const;

  bool is_zero() const;
  std::vector<std::vector<Integer>> to_rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& a);

/// Smith normal form S = U * A * V with U, V unimodular and S diagonal,
/// s_1 | s_2 | ... , all s_i >= 0. The inverses of U and V are tracked
/// alongside so callers never invert a unimodular matrix.
struct SmithForm {
  IntMatrix u, u_inv;
  IntMatrix s;
  IntMatrix v, v_inv;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace relhom
