// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpstailor/algebra.hpp"
#include "tpstailor/schmidt.hpp"
#include "tpstailor/types.hpp"

namespace tpstailor {

/// A factorization d = k_1 * k_2 * ... * k_N with N >= 2 and every k_i >= 2.
struct Factorization {
  std::vector<Index> dims;
  Index total = 0;

  /// Validates and computes the total. Throws std::invalid_argument for
  /// fewer than two factors or any factor below 2.
  explicit Factorization(std::vector<Index> factor_dims);
};

/// Thrown when an internally constructed structure fails its own
/// verification. On valid inputs this indicates a defect, not a user error.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tensor product structure tailored to one physical state: the unitary u
/// mapping the model space onto the physical space (physical = u * model),
/// per-factor generator triples u (1 (x) ... (x) S_j (x) ... (x) 1) u^dagger
/// for j in {x, y, z}, the model state the physical state is carried to, and
/// the verification report for the generated factor algebras.
struct TailoredTPS {
  Matrix u;
  Factorization factorization;
  std::vector<std::array<Matrix, 3>> generator_sets; // per factor: x, y, z
  Vector model_state;
  ZanardiReport report;
};

/// Construct observable algebras under which `psi` carries the prescribed
/// Schmidt coefficients `lambdas` with respect to an induced k x l
/// factorization.
///
/// The model state is schmidt_state(lambdas, k, l); both it and psi are
/// extended to orthonormal bases by deterministic Gram-Schmidt completion
/// over the standard basis, and u maps the model basis onto the physical
/// basis column by column. Requires psi.size() == k*l, lambdas.size() ==
/// min(k,l) and |sum|c_i|^2 - sum|lambda_i|^2| < tol (states need not be
/// normalized). Throws VerificationError if the generated algebras fail the
/// independence/completeness verification, which cannot happen on valid
/// inputs.
TailoredTPS tailor_bipartite(const Vector& psi, Index k, Index l,
                             const std::vector<Complex>& lambdas,
                             double tol = kDefaultTol);

/// Multipartite variant: prescribe the full expansion tensor of the model
/// state. `target_coeffs` holds the coefficient of e_{i_1} (x) ... (x) e_{i_N}
/// at the mixed-radix, first-factor-major flat index, consistent with kron.
/// Builds one unitary directly (no induction over factors) and N generator
/// triples. Same norm-matching requirement as the bipartite case.
TailoredTPS tailor_multipartite(const Vector& psi,
                                const Factorization& factorization,
                                const Vector& target_coeffs,
                                double tol = kDefaultTol);

/// Pauli-string expansion coefficients of an n-qubit operator.
using PauliMap = std::map<std::string, Complex>;

/// Expand a 2^n x 2^n operator over the Pauli-string basis: the coefficient
/// of string P is Tr(P^dagger op) / 2^n. Strings are over {I, X, Y, Z},
/// leftmost character = first tensor factor. Coefficients of magnitude below
/// 1e-12 are omitted. Throws when op is not 2^n x 2^n.
PauliMap pauli_decompose(const Matrix& op, int n);

/// The canonical d = 4 worked example: the explicit unitary
///   [[ l1, 0, 0, l2],
///    [  0, 1, 0,  0],
///    [  0, 0, 1,  0],
///    [-l2, 0, 0, l1]]
/// together with the Pauli decompositions of the transported generators
/// u (sigma_j (x) 1) u^dagger and u (1 (x) sigma_j) u^dagger for
/// j in {x, y, z}. This matrix carries the model state l1 e_0 + l2 e_3 onto
/// the physical basis state e_0 (so u e_0 = l1 e_0 - l2 e_3), the same
/// direction as the `u` returned by tailor_bipartite. The first generator
/// decomposes as l1 XI + l2 ZX; the B-side maps equal the A-side maps with
/// every Pauli string reversed.
struct ExampleD4 {
  Matrix u;
  std::array<PauliMap, 3> a_decompositions; // u (sigma_j (x) 1) u^dag, j = x,y,z
  std::array<PauliMap, 3> b_decompositions; // u (1 (x) sigma_j) u^dag, j = x,y,z
};

/// Requires lambda1^2 + lambda2^2 = 1 within 1e-12.
ExampleD4 example_d4(double lambda1, double lambda2);

}  // namespace tpstailor
