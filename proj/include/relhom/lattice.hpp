#pragma once

// Integer-lattice primitives. A finitely generated module with generator
// orders d_1..d_m is Z^m modulo the relation lattice spanned by d_i * e_i;
// kernels, images and quotients are all computed as sublattices of Z^m
// through one Smith normal form engine.

#include "relhom/matrix.hpp"
#include "relhom/module.hpp"

#include <optional>
#include <vector>

namespace relhom::lattice {

/// Columns d_i * e_i for every nonzero order (free generators contribute no
/// relation).
IntMatrix relation_columns(const std::vector<Integer>& orders);

/// Basis (as columns) of {x in Z^n : B x = 0}.
IntMatrix integer_kernel(const IntMatrix& b);

/// Some integer x with B x = rhs, or nullopt.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& b, const std::vector<Integer>& rhs);

/// Canonical form of Z^dim / (column span of relations).
struct Quotient {
  ModuleObject module;
  IntMatrix section;     // dim x k: canonical generator -> representative in Z^dim
  IntMatrix projection;  // k x dim: element of Z^dim -> canonical coordinates
};
Quotient quotient(const RingSpec& ring, std::size_t dim, const IntMatrix& relations);

/// Canonical form of span(top) / span(bottom), span(bottom) inside span(top).
struct Subquotient {
  ModuleObject module;
  IntMatrix embedding;  // dim x k: canonical generator -> element of span(top)
};
Subquotient subquotient(const RingSpec& ring, const IntMatrix& top, const IntMatrix& bottom);

/// Stable permutation taking generator orders to canonical order (free
/// first, torsion descending).
std::vector<std::size_t> canonical_permutation(const std::vector<Integer>& orders);

}  // namespace relhom::lattice
