#include "relhom/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace relhom::lattice {

IntMatrix relation_columns(const std::vector<Integer>& orders) {
  std::size_t count = 0;
  for (const Integer& d : orders) count += d != 0;
  IntMatrix m(orders.size(), count);
  std::size_t c = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) m(i, c++) = orders[i];
  return m;
}

IntMatrix integer_kernel(const IntMatrix& b) {
  if (b.rows() == 0) return IntMatrix::identity(b.cols());
  SmithForm f = smith_normal_form(b);
  std::vector<std::size_t> cols;
  for (std::size_t c = f.rank; c < b.cols(); ++c) cols.push_back(c);
  return f.v.select_cols(cols);
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& b, const std::vector<Integer>& rhs) {
  if (rhs.size() != b.rows()) throw Error("solve_integer: dimension mismatch");
  if (b.cols() == 0) {
    for (const Integer& v : rhs)
      if (v != 0) return std::nullopt;
    return std::vector<Integer>{};
  }
  if (b.rows() == 0) return std::vector<Integer>(b.cols());
  SmithForm f = smith_normal_form(b);
  std::vector<Integer> w = f.u * std::span<const Integer>(rhs);
  std::vector<Integer> y(b.cols());
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t < f.rank) {
      const Integer& s = f.s(t, t);
      if (w[t] % s != 0) return std::nullopt;
      y[t] = w[t] / s;
    } else if (w[t] != 0) {
      return std::nullopt;
    }
  }
  return f.v * std::span<const Integer>(y);
}

std::vector<std::size_t> canonical_permutation(const std::vector<Integer>& orders) {
  std::vector<std::size_t> idx(orders.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Integer& x = orders[a];
    const Integer& y = orders[b];
    if ((x == 0) != (y == 0)) return x == 0;
    return x > y;
  });
  return idx;
}

Quotient quotient(const RingSpec& ring, std::size_t dim, const IntMatrix& relations) {
  struct Piece {
    Integer order;
    std::vector<Integer> section;
    std::vector<Integer> projection;
  };
  std::vector<Piece> pieces;

  IntMatrix u, u_inv;
  std::vector<Integer> diag(dim);  // invariant factor per coordinate; 0 = free
  if (relations.cols() == 0 || dim == 0) {
    u = IntMatrix::identity(dim);
    u_inv = u;
  } else {
    SmithForm f = smith_normal_form(relations);
    for (std::size_t t = 0; t < f.rank; ++t) diag[t] = f.s(t, t);
    u = std::move(f.u);
    u_inv = std::move(f.u_inv);
  }

  for (std::size_t t = 0; t < dim; ++t) {
    const Integer& s = diag[t];
    if (s == 1) continue;
    std::vector<Integer> col = u_inv.col(t);
    std::vector<Integer> row = u.row(t);
    if (s == 0) {
      pieces.push_back({0, std::move(col), std::move(row)});
      continue;
    }
    for (const auto& pp : factorize(s)) {
      const Integer cofactor = s / pp.value;
      const Integer inv = inverse_mod(cofactor, pp.value);
      Piece p{pp.value, col, row};
      for (auto& v : p.section) v *= cofactor;
      for (auto& v : p.projection) v = reduce(v * inv, pp.value);
      pieces.push_back(std::move(p));
    }
  }

  std::vector<Integer> orders;
  for (const auto& p : pieces) orders.push_back(p.order);
  const auto perm = canonical_permutation(orders);
  IntMatrix section(dim, pieces.size());
  IntMatrix projection(pieces.size(), dim);
  std::vector<Integer> sorted_orders;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const Piece& p = pieces[perm[k]];
    sorted_orders.push_back(p.order);
    for (std::size_t r = 0; r < dim; ++r) {
      section(r, k) = p.section[r];
      projection(k, r) = p.projection[r];
    }
  }
  return {ModuleObject::from_generator_orders(ring, sorted_orders), std::move(section),
          std::move(projection)};
}

Subquotient subquotient(const RingSpec& ring, const IntMatrix& top, const IntMatrix& bottom) {
  const std::size_t dim = top.rows();
  if (top.cols() == 0) return {ModuleObject::zero(ring), IntMatrix(dim, 0)};

  // Basis of span(top): columns of U^{-1} scaled by the invariant factors.
  SmithForm f = smith_normal_form(top);
  const std::size_t r = f.rank;
  IntMatrix basis(dim, r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t i = 0; i < dim; ++i) basis(i, t) = f.u_inv(i, t) * f.s(t, t);

  // Coordinates of bottom in that basis.
  IntMatrix coords(r, bottom.cols());
  if (bottom.cols() != 0) {
    if (bottom.rows() != dim) throw Error("subquotient: ambient dimension mismatch");
    IntMatrix ub = f.u * bottom;
    for (std::size_t c = 0; c < bottom.cols(); ++c) {
      for (std::size_t t = 0; t < dim; ++t) {
        if (t < r) {
          if (ub(t, c) % f.s(t, t) != 0) throw Error("subquotient: bottom lattice not contained in top");
          coords(t, c) = ub(t, c) / f.s(t, t);
        } else if (ub(t, c) != 0) {
          throw Error("subquotient: bottom lattice not contained in top");
        }
      }
    }
  }
  Quotient q = quotient(ring, r, coords);
  return {std::move(q.module), basis * q.section};
}

}  // namespace relhom::lattice
