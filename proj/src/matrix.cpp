#include "relhom/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relhom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() > cols) throw std::invalid_argument("IntMatrix::from_rows: row too long");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::column(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& left, const IntMatrix& right) {
  if (left.cols() == 0) {
    if (right.cols() == 0) return IntMatrix(std::max(left.rows(), right.rows()), 0);
    return right;
  }
  if (right.cols() == 0) return left;
  if (left.rows() != right.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::set_col(std::size_t c, std::span<const Integer> values) {
  if (values.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) m(r, c) = (*this)(r, indices[c]);
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix m(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(indices[r], c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d(std::min(s.rows(), s.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = s(i, i);
  return d;
}

namespace {

// Row transformation on rows (t, i) of `a` by [[x, y], [p, q]] with
// determinant one; the matching inverse [[q, -y], [-p, x]] is applied to
// columns (t, i) of `a_inv`.
void row_op(IntMatrix& a, IntMatrix& u, IntMatrix& u_inv, std::size_t t, std::size_t i,
            const Integer& x, const Integer& y, const Integer& p, const Integer& q) {
  auto apply = [&](IntMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer top = x * m(t, c) + y * m(i, c);
      Integer bot = p * m(t, c) + q * m(i, c);
      m(t, c) = std::move(top);
      m(i, c) = std::move(bot);
    }
  };
  apply(a);
  apply(u);
  for (std::size_t r = 0; r < u_inv.rows(); ++r) {
    Integer ct = q * u_inv(r, t) - p * u_inv(r, i);
    Integer ci = -y * u_inv(r, t) + x * u_inv(r, i);
    u_inv(r, t) = std::move(ct);
    u_inv(r, i) = std::move(ci);
  }
}

// Column transformation on columns (t, j): new_t = x*col_t + y*col_j,
// new_j = p*col_t + q*col_j. The inverse acts on rows (t, j) of v_inv.
void col_op(IntMatrix& a, IntMatrix& v, IntMatrix& v_inv, std::size_t t, std::size_t j,
            const Integer& x, const Integer& y, const Integer& p, const Integer& q) {
  auto apply = [&](IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Integer left = x * m(r, t) + y * m(r, j);
      Integer right = p * m(r, t) + q * m(r, j);
      m(r, t) = std::move(left);
      m(r, j) = std::move(right);
    }
  };
  apply(a);
  apply(v);
  for (std::size_t c = 0; c < v_inv.cols(); ++c) {
    Integer rt = q * v_inv(t, c) - p * v_inv(j, c);
    Integer rj = -y * v_inv(t, c) + x * v_inv(j, c);
    v_inv(t, c) = std::move(rt);
    v_inv(j, c) = std::move(rj);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithForm f{IntMatrix::identity(m), IntMatrix::identity(m), input, IntMatrix::identity(n),
              IntMatrix::identity(n), 0};
  IntMatrix& a = f.s;
  const std::size_t dmax = std::min(m, n);

  for (std::size_t t = 0; t < dmax; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pr = m, pc = n;
    Integer best;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (a(r, c) != 0 && (pr == m || abs(a(r, c)) < best)) {
          best = abs(a(r, c));
          pr = r;
          pc = c;
        }
    if (pr == m) break;
    if (pr != t) {
      a.swap_rows(t, pr);
      f.u.swap_rows(t, pr);
      f.u_inv.swap_cols(t, pr);
    }
    if (pc != t) {
      a.swap_cols(t, pc);
      f.v.swap_cols(t, pc);
      f.v_inv.swap_rows(t, pc);
    }

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const Integer pa = a(t, t), pb = a(i, t);
        if (pb % pa == 0) {
          row_op(a, f.u, f.u_inv, t, i, 1, 0, -(pb / pa), 1);
        } else {
          auto [g, x, y] = extended_gcd(pa, pb);
          row_op(a, f.u, f.u_inv, t, i, x, y, -(pb / g), pa / g);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer pa = a(t, t), pb = a(t, j);
        if (pb % pa == 0) {
          col_op(a, f.v, f.v_inv, t, j, 1, 0, -(pb / pa), 1);
        } else {
          auto [g, x, y] = extended_gcd(pa, pb);
          col_op(a, f.v, f.v_inv, t, j, x, y, -(pb / g), pa / g);
        }
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m && column_clear; ++i) column_clear = a(i, t) == 0;
      if (!column_clear) continue;

      // Divisibility of the trailing block by the pivot.
      std::size_t bad_row = m;
      for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == m) break;
      row_op(a, f.u, f.u_inv, t, bad_row, 1, 1, 0, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) f.u(t, c) = -f.u(t, c);
      for (std::size_t r = 0; r < m; ++r) f.u_inv(r, t) = -f.u_inv(r, t);
    }
    ++f.rank;
  }
  return f;
}

}  // namespace relhom
