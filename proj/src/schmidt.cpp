// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace tpstailor {

SchmidtData schmidt_decompose(const Vector& psi, Index k, Index l) {
  if (k < 1 || l < 1 || k * l != psi.size()) {
    throw std::invalid_argument(
        "schmidt_decompose: factors " + std::to_string(k) + "x" +
        std::to_string(l) + " do not match state dimension " +
        std::to_string(psi.size()));
  }
  // Amplitude at flat index j*l + m becomes entry (j, m).
  Matrix reshaped(k, l);
  for (Index j = 0; j < k; ++j) {
    for (Index m = 0; m < l; ++m) {
      reshaped(j, m) = psi[j * l + m];
    }
  }
  Eigen::JacobiSVD<Matrix> solver(reshaped,
                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtData out;
  out.k = k;
  out.l = l;
  out.coefficients = solver.singularValues();
  out.left_basis = solver.matrixU();
  out.right_basis = solver.matrixV().conjugate();
  out.phases = Vector::Ones(std::min(k, l));
  return out;
}

double entanglement_entropy(const SchmidtData& schmidt_data, double tol) {
  const double total = schmidt_data.coefficients.squaredNorm();
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument(
        "entanglement_entropy: coefficients are not normalized (sum of squares = " +
        std::to_string(total) + ")");
  }
  double entropy = 0.0;
  for (Index i = 0; i < schmidt_data.coefficients.size(); ++i) {
    const double p = schmidt_data.coefficients[i] * schmidt_data.coefficients[i];
    if (p > 0.0) {
      entropy -= p * std::log2(p);
    }
  }
  return std::max(entropy, 0.0);
}

Vector schmidt_state(const std::vector<Complex>& lambdas, Index k, Index l) {
  if (k < 1 || l < 1) {
    throw std::invalid_argument("schmidt_state: factor dimensions must be positive");
  }
  if (static_cast<Index>(lambdas.size()) != std::min(k, l)) {
    throw std::invalid_argument(
        "schmidt_state: expected " + std::to_string(std::min(k, l)) +
        " coefficients, got " + std::to_string(lambdas.size()));
  }
  Vector state = Vector::Zero(k * l);
  for (Index i = 0; i < static_cast<Index>(lambdas.size()); ++i) {
    state[i * (l + 1)] = lambdas[static_cast<std::size_t>(i)];
  }
  return state;
}

}  // namespace tpstailor
