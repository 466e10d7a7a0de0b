#pragma once

// Brute-force reference computations for finite modules. Everything here
// works on plain int64 element enumeration and never calls the Smith normal
// form engine, so it can serve as an independent check of it.

#include "relhom/module.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major, rows = codomain generators

inline std::vector<std::int64_t> orders_of(const relhom::ModuleObject& m) {
  std::vector<std::int64_t> out;
  for (const auto& d : m.generator_orders()) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m == 0) return a;
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Every element of a finite module, as coordinate vectors.
inline std::vector<Vec> elements(const std::vector<std::int64_t>& orders) {
  std::vector<Vec> out{Vec(orders.size(), 0)};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::int64_t a = 0; a < orders[i]; ++a) {
        Vec w = v;
        w[i] = a;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline Mat to_mat(const relhom::IntMatrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<std::int64_t>(m(r, c));
  return out;
}

inline Vec apply(const Mat& a, const Vec& x, const std::vector<std::int64_t>& target_orders) {
  Vec y(target_orders.size(), 0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += a[j][i] * x[i];
    y[j] = mod(s, target_orders[j]);
  }
  return y;
}

/// All well-defined matrices M -> N for finite modules, by enumerating
/// every entry and testing d_i * a == 0 mod e_j.
inline std::vector<Mat> all_homs(const std::vector<std::int64_t>& dom, const std::vector<std::int64_t>& cod) {
  std::vector<Mat> out{Mat(cod.size(), Vec(dom.size(), 0))};
  for (std::size_t j = 0; j < cod.size(); ++j)
    for (std::size_t i = 0; i < dom.size(); ++i) {
      std::vector<Mat> next;
      for (const auto& m : out)
        for (std::int64_t a = 0; a < cod[j]; ++a) {
          if (mod(dom[i] * a, cod[j]) != 0) continue;
          Mat w = m;
          w[j][i] = a;
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
  return out;
}

inline std::size_t kernel_size(const Mat& a, const std::vector<std::int64_t>& dom, const std::vector<std::int64_t>& cod) {
  std::size_t n = 0;
  Vec zero(cod.size(), 0);
  for (const auto& x : elements(dom)) n += apply(a, x, cod) == zero;
  return n;
}

inline std::size_t image_size(const Mat& a, const std::vector<std::int64_t>& dom, const std::vector<std::int64_t>& cod) {
  std::set<Vec> im;
  for (const auto& x : elements(dom)) im.insert(apply(a, x, cod));
  return im.size();
}

inline Mat compose(const Mat& g, const Mat& f, const std::vector<std::int64_t>& cod, std::size_t cols) {
  const std::size_t rows = g.size();
  Mat out(rows, Vec(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < f.size(); ++k) s += g[r][k] * f[k][c];
      out[r][c] = mod(s, cod[r]);
    }
  return out;
}

/// Isomorphism type of a finite abelian group given as a set of elements
/// with componentwise arithmetic: for each prime p the counts |G[p^k]|
/// determine the p-primary part. Returns the multiset of prime-power orders
/// (descending).
inline std::vector<std::int64_t> group_type(const std::vector<Vec>& group, const std::vector<std::int64_t>& ambient) {
  auto times = [&](const Vec& x, std::int64_t k) {
    Vec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(y[i] * k, ambient[i]);
    return y;
  };
  const Vec zero(ambient.size(), 0);
  std::int64_t order = static_cast<std::int64_t>(group.size());
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; order > 1; ++p) {
    if (order % p != 0) continue;
    while (order % p == 0) order /= p;
    // c[k] = |G[p^k]|; number of cyclic factors of order >= p^k is
    // log_p(c[k] / c[k-1]).
    std::vector<std::int64_t> c{1};
    std::int64_t pk = 1;
    for (;;) {
      pk *= p;
      std::int64_t cnt = 0;
      for (const auto& x : group) cnt += times(x, pk) == zero;
      if (cnt == c.back()) break;
      c.push_back(cnt);
    }
    std::vector<std::int64_t> at_least;  // at_least[k-1] = #factors of order >= p^k
    for (std::size_t k = 1; k < c.size(); ++k) {
      std::int64_t ratio = c[k] / c[k - 1], e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::int64_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::int64_t value = 1;
      for (std::size_t t = 0; t <= k; ++t) value *= p;
      for (std::int64_t t = 0; t < exactly; ++t) out.push_back(value);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<std::int64_t> torsion_of(const relhom::ModuleObject& m) {
  std::vector<std::int64_t> out;
  for (const auto& d : m.torsion_orders()) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

inline std::vector<std::int64_t> torsion_of(const relhom::GroupValue& g) {
  std::vector<std::int64_t> out;
  for (const auto& d : g.torsion_orders()) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

/// phi : F -> M is a precover with respect to the cyclic test modules:
/// every h : I -> M is phi o psi for some psi : I -> F. Pure enumeration.
inline bool precover(const Mat& phi, const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& m,
                     const std::vector<std::int64_t>& tests) {
  for (std::int64_t t : tests) {
    const std::vector<std::int64_t> i{t};
    std::set<Mat> reached;
    for (const auto& psi : all_homs(i, f)) reached.insert(compose(phi, psi, m, 1));
    for (const auto& h : all_homs(i, m))
      if (!reached.count(h)) return false;
  }
  return true;
}

inline bool bijective(const Mat& g, const std::vector<std::int64_t>& m) {
  std::int64_t total = 1;
  for (auto d : m) total *= d;
  return static_cast<std::int64_t>(image_size(g, m, m)) == total;
}

/// Almost epi by enumeration of End(M): every g with g phi = phi is
/// bijective.
inline bool almost_epi(const Mat& phi, const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& m) {
  for (const auto& g : all_homs(m, m))
    if (compose(g, phi, m, f.size()) == phi && !bijective(g, m)) return false;
  return true;
}

/// Isomorphism type of Hom(M, N), from the enumerated matrices.
inline std::vector<std::int64_t> hom_type(const std::vector<std::int64_t>& dom, const std::vector<std::int64_t>& cod) {
  std::vector<Vec> flat;
  std::vector<std::int64_t> ambient;
  for (std::size_t j = 0; j < cod.size(); ++j)
    for (std::size_t i = 0; i < dom.size(); ++i) ambient.push_back(cod[j]);
  for (const auto& m : all_homs(dom, cod)) {
    Vec v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    flat.push_back(std::move(v));
  }
  return group_type(flat, ambient);
}

/// Classical Ext^n(M, A) over Z/4 for n >= 1, M = k^a (+) R^b, from the
/// periodic free resolution ... -> R -2-> R -2-> R -> k. Each k summand
/// contributes ker(2 on A) / im(2 on A), an elementary abelian 2-group whose
/// order is counted by enumerating A. Returns the cyclic orders.
inline std::vector<std::int64_t> classical_ext_z4(std::size_t k_summands, const std::vector<std::int64_t>& a) {
  std::int64_t ker = 0;
  std::set<Vec> im;
  for (const auto& x : elements(a)) {
    Vec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(2 * y[i], a[i]);
    ker += y == Vec(a.size(), 0);
    im.insert(y);
  }
  std::int64_t q = ker / static_cast<std::int64_t>(im.size()), rank = 0;
  while (q > 1) {
    q /= 2;
    ++rank;
  }
  return std::vector<std::int64_t>(k_summands * static_cast<std::size_t>(rank), 2);
}

/// Random finite module over Z/n with at most `max_summands` summands.
inline relhom::ModuleObject random_module(std::mt19937& rng, const relhom::RingSpec& ring,
                                          const std::vector<std::int64_t>& types, int max_summands) {
  std::uniform_int_distribution<int> count(0, max_summands);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::vector<relhom::Integer> orders;
  int n = count(rng);
  for (int i = 0; i < n; ++i) orders.emplace_back(types[pick(rng)]);
  return relhom::ModuleObject(ring, 0, orders);
}

}  // namespace oracle
