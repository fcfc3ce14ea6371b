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

/// Schmidt decomposition of a state of C^k (x) C^l:
/// psi = sum_i coefficients[i] * phases[i] * left_i (x) right_i.
/// Coefficients are non-negative and sorted non-increasing; the left/right
/// bases are full orthonormal bases of the factors (columns of the matrices).
/// schmidt_decompose always reports unit phases; the field exists so complex
/// Schmidt data can be carried without losing the state-level identity.
struct SchmidtData {
  Index k = 0;
  Index l = 0;
  RealVector coefficients; // length min(k, l)
  Matrix left_basis;       // k x k
  Matrix right_basis;      // l x l
  Vector phases;           // length min(k, l), unit modulus
};

/// Decompose psi with respect to the k x l factorization (psi index j*l+m
/// corresponds to e_j (x) e_m). Throws when k*l != psi.size().
/// The norm of psi is not required to be 1; sum(coefficients^2) equals its
/// squared norm.
SchmidtData schmidt_decompose(const Vector& psi, Index k, Index l);

/// Entanglement entropy -sum_i c_i^2 log2 c_i^2 (with 0 log 0 := 0).
/// Requires normalized coefficients: |sum c_i^2 - 1| <= tol, otherwise throws
/// std::invalid_argument.
double entanglement_entropy(const SchmidtData& schmidt_data,
                            double tol = kDefaultTol);

/// The state sum_i lambdas[i] e_i (x) e_i of C^{k*l}, i.e. amplitude
/// lambdas[i] at flat index i*(l+1). Requires lambdas.size() == min(k, l).
Vector schmidt_state(const std::vector<Complex>& lambdas, Index k, Index l);

}  // namespace tpstailor
