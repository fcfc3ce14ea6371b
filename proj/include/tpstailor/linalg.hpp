// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "tpstailor/types.hpp"

namespace tpstailor {

/// Dense complex linear algebra primitives shared by every other component:
/// products, tensor products, SVD, deterministic Gram-Schmidt completion and
/// Frobenius (Hilbert-Schmidt) geometry on operator spans.
///
/// Conventions, fixed once and inherited everywhere:
///  - indices are 0-based;
///  - tensor products are first-factor major: e_j (x) e_k of C^k (x) C^l is
///    the standard basis vector e_{j*l+k} of C^{kl};
///  - operators are flattened column-major ("vec") when treated as vectors of
///    the d^2-dimensional operator space.

/// Matrix product with an explicit shape check. Throws std::invalid_argument
/// when a.cols() != b.rows().
Matrix matmul(const Matrix& a, const Matrix& b);

/// Tensor (Kronecker) product, first factor major:
/// out[i*b.rows()+k, j*b.cols()+l] = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Singular value decomposition m = left * Sigma * right_conj.
struct SvdResult {
  Matrix left;                // rows x rows, orthonormal columns
  RealVector singular_values; // min(rows, cols), sorted non-increasing
  Matrix right_conj;          // cols x cols, orthonormal rows (this is V^dagger)
};

/// Full SVD of an arbitrary complex matrix. Singular values are non-negative
/// and sorted non-increasing; `left` and `right_conj` are unitary.
SvdResult svd(const Matrix& m);

/// Incremental orthonormal span with a deterministic admission rule.
///
/// A candidate vector is orthogonalized against the current basis (projection
/// applied twice for numerical stability) and admitted iff the residual norm
/// exceeds tol * max(1, ||candidate||). Admission order is exactly call order,
/// so the resulting basis is a pure function of the candidate sequence.
class SpanTracker {
 public:
  SpanTracker(Index ambient_dim, double tol, Index max_size);

  /// Returns true and appends the normalized residual if the candidate adds a
  /// new direction; returns false otherwise.
  bool try_admit(const Vector& candidate);

  Index size() const { return size_; }
  Index ambient_dim() const { return columns_.rows(); }
  double tol() const { return tol_; }

  /// The admitted orthonormal vectors as columns (ambient_dim x size).
  Matrix basis() const { return columns_.leftCols(size_); }

  /// Column most recently admitted. Only valid when size() > 0.
  Vector last() const { return columns_.col(size_ - 1); }

 private:
  Matrix columns_;
  Index size_ = 0;
  double tol_;
};

/// Orthonormal basis of C^dim whose first span(seeds) directions agree with
/// the seeds, completed deterministically with the standard basis vectors
/// e_0, e_1, ... (candidates whose residual falls below tol are skipped).
/// Columns of the result are the basis vectors; column i for i < seeds.size()
/// is the orthonormalized i-th seed.
///
/// Throws std::invalid_argument if the seeds are numerically dependent at tol
/// or have the wrong dimension.
Matrix gram_schmidt_complete(const std::vector<Vector>& seeds, Index dim,
                             double tol = kDefaultTol);

/// Hilbert-Schmidt inner product Tr(a^dagger b). Throws on shape mismatch.
Complex frobenius_inner(const Matrix& a, const Matrix& b);

/// Frobenius-orthonormal basis of the linear span of `ops`, produced by the
/// SpanTracker admission rule in input order. Deterministic; the output never
/// has more elements than rows*cols.
std::vector<Matrix> span_basis(const std::vector<Matrix>& ops,
                               double tol = kDefaultTol);

/// Column-major flattening of a matrix into the operator space C^{rows*cols}.
Vector vec(const Matrix& m);

/// Inverse of vec for the given shape.
Matrix unvec(const Vector& v, Index rows, Index cols);

}  // namespace tpstailor
