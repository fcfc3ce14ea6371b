// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <vector>

#include "tpstailor/linalg.hpp"
#include "tpstailor/types.hpp"

namespace tpstailor {

/// Frobenius-orthonormal basis of a subspace of the d x d operators that is
/// closed under matrix multiplication within `closure_tol` (residual of any
/// pairwise product after projection onto the span stays below
/// closure_tol * max(1, product norm)).
struct AlgebraBasis {
  Index ambient_dim = 0;
  std::vector<Matrix> basis;
  double closure_tol = kDefaultTol;

  Index size() const { return static_cast<Index>(basis.size()); }
};

/// Smallest multiplicatively closed linear subspace containing the identity
/// and all generators.
///
/// Closure loop: seed the span with {1_d} followed by the generators, then
/// repeatedly adjoin all pairwise products of the basis snapshot taken at the
/// start of each round, until a full round admits nothing or the dimension
/// reaches d^2. Admission order is deterministic (row-major over the pair
/// indices), so the output is a pure function of the input sequence.
AlgebraBasis generated_algebra(const std::vector<Matrix>& generators, Index d,
                               double tol = kDefaultTol);

/// Commutant: orthonormal basis of {B : [A_i, B] = 0 for every basis element
/// A_i}, computed as the null space of the stacked maps
/// B -> A_i B - B A_i on the d^2-dimensional operator space. A singular value
/// below closure_tol * sigma_max counts as null.
AlgebraBasis commutant(const AlgebraBasis& algebra);

/// Outcome of checking the two conditions under which a family of subalgebras
/// induces a tensor product structure: mutual commutation (independence) and
/// joint generation of the full matrix algebra with matching dimension
/// product (completeness).
struct ZanardiReport {
  double independence_max_commutator = 0.0; // max ||[a,b]||_F over cross pairs
  Index generated_dim = 0;                  // dim of the jointly generated algebra
  std::int64_t dims_product = 0;            // product of the factor dimensions
  bool is_independent = false;              // independence_max_commutator < tol
  bool is_complete = false;                 // generated_dim == d^2 && dims_product == d^2
  double tol = kDefaultTol;
};

/// Evaluate the independence and completeness conditions for two or more
/// algebras on the same ambient space. Commutators are evaluated on basis
/// elements of distinct algebras only; bilinearity extends the bound to the
/// full algebras. Throws std::invalid_argument for fewer than two algebras or
/// an ambient dimension mismatch.
ZanardiReport verify_zanardi(const std::vector<AlgebraBasis>& algebras,
                             Index d, double tol = kDefaultTol);

/// Dimensions of an algebra, its commutant, and its double commutant.
struct BicommutantDims {
  Index dim_algebra = 0;
  Index dim_commutant = 0;
  Index dim_bicommutant = 0;
};

/// Compute dim A, dim A', dim A''. For every multiplicatively closed,
/// identity-containing algebra the first and last agree; the product
/// dim A * dim A' = d^2 additionally holds when A is a full matrix factor.
BicommutantDims double_commutant_check(const AlgebraBasis& algebra);

}  // namespace tpstailor
