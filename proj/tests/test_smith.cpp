#include "doctest.h"
#include "relhom/matrix.hpp"

#include <random>

using relhom::Integer;
using relhom::IntMatrix;

namespace {

void check_smith(const IntMatrix& a) {
  const auto f = relhom::smith_normal_form(a);
  CHECK(f.u * a * f.v == f.s);
  CHECK(abs(relhom::determinant(f.u)) == 1);
  CHECK(abs(relhom::determinant(f.v)) == 1);
  CHECK(f.u * f.u_inv == IntMatrix::identity(a.rows()));
  CHECK(f.v * f.v_inv == IntMatrix::identity(a.cols()));
  for (std::size_t r = 0; r < f.s.rows(); ++r)
    for (std::size_t c = 0; c < f.s.cols(); ++c)
      if (r != c) CHECK(f.s(r, c) == 0);
  const auto d = f.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    CHECK((i < f.rank) == (d[i] != 0));
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
}

}  // namespace

TEST_CASE("smith: already diagonal") {
  const auto f = relhom::smith_normal_form(IntMatrix{{2}});
  CHECK(f.s == IntMatrix{{2}});
  CHECK(f.u == IntMatrix{{1}});
  CHECK(f.v == IntMatrix{{1}});
}

TEST_CASE("smith: zero matrix") {
  const auto f = relhom::smith_normal_form(IntMatrix{{0}});
  CHECK(f.s == IntMatrix{{0}});
  CHECK(f.rank == 0);
}

TEST_CASE("smith: 2x2 with gcd 2 and determinant -8") {
  const IntMatrix a{{2, 4}, {6, 8}};
  // Independent facts: gcd of the entries is 2 and |det| = 8, so the
  // invariant factors are 2 and 8 / 2 = 4.
  CHECK(relhom::determinant(a) == -8);
  const auto f = relhom::smith_normal_form(a);
  CHECK(f.s == IntMatrix{{2, 0}, {0, 4}});
  check_smith(a);
}

TEST_CASE("smith: rectangular and degenerate shapes") {
  check_smith(IntMatrix{{0, 0, 0}, {0, 0, 0}});
  check_smith(IntMatrix{{3, 5, 7}});
  check_smith(IntMatrix{{4}, {6}, {10}});
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(2, 0));
  const auto f = relhom::smith_normal_form(IntMatrix{{6, 0}, {0, 4}});
  CHECK(f.diagonal() == std::vector<Integer>{2, 12});
}

TEST_CASE("smith: random round trip property") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-12, 12);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng) * (trial % 3 == 0 ? 7 : 1);
    check_smith(a);
  }
}

TEST_CASE("smith: product of invariant factors equals |det| for square input") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = entry(rng);
    Integer prod = 1;
    for (const auto& d : relhom::smith_normal_form(a).diagonal()) prod *= d;
    CHECK(prod == abs(relhom::determinant(a)));
  }
}

TEST_CASE("determinant: small cases") {
  CHECK(relhom::determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(relhom::determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(relhom::determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(relhom::determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}
