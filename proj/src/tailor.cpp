// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/tailor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "tpstailor/linalg.hpp"
#include "tpstailor/spin.hpp"

namespace tpstailor {

namespace {

constexpr double kPauliPruneTol = 1e-12;

// 1_{prefix} (x) op (x) 1_{suffix}.
Matrix embed_factor(const Matrix& op, Index prefix, Index suffix) {
  Matrix out = op;
  if (suffix > 1) {
    out = kron(out, Matrix::Identity(suffix, suffix));
  }
  if (prefix > 1) {
    out = kron(Matrix::Identity(prefix, prefix), out);
  }
  return out;
}

// Shared construction: extend {model} and {physical} to orthonormal bases,
// define u column-by-column (u maps the model basis to the physical one),
// transport per-factor spin generators, regenerate the factor algebras from
// the transported generators and verify them.
TailoredTPS build_tailored(const Vector& physical, Factorization factorization,
                           Vector model, double tol) {
  const Index d = factorization.total;
  const Matrix model_basis = gram_schmidt_complete({model}, d, tol);
  const Matrix physical_basis = gram_schmidt_complete({physical}, d, tol);
  Matrix u = physical_basis * model_basis.adjoint();

  const std::size_t num_factors = factorization.dims.size();
  std::vector<std::array<Matrix, 3>> generator_sets;
  generator_sets.reserve(num_factors);
  std::vector<AlgebraBasis> algebras;
  algebras.reserve(num_factors);

  Index prefix = 1;
  for (std::size_t f = 0; f < num_factors; ++f) {
    const Index factor_dim = factorization.dims[f];
    Index suffix = 1;
    for (std::size_t g = f + 1; g < num_factors; ++g) {
      suffix *= factorization.dims[g];
    }
    const SpinRep rep = spin_matrices(factor_dim);
    std::array<Matrix, 3> transported;
    const Matrix* components[3] = {&rep.s_x, &rep.s_y, &rep.s_z};
    for (int j = 0; j < 3; ++j) {
      transported[static_cast<std::size_t>(j)] =
          u * embed_factor(*components[j], prefix, suffix) * u.adjoint();
    }
    algebras.push_back(generated_algebra(
        {transported[0], transported[1], transported[2]}, d, tol));
    generator_sets.push_back(std::move(transported));
    prefix *= factor_dim;
  }

  ZanardiReport report = verify_zanardi(algebras, d, tol);
  if (!report.is_independent || !report.is_complete) {
    throw VerificationError(
        "tailored algebras failed verification: max commutator = " +
        std::to_string(report.independence_max_commutator) +
        ", generated dim = " + std::to_string(report.generated_dim) +
        " (expected " + std::to_string(d * d) + ")");
  }

  TailoredTPS out{std::move(u), std::move(factorization), std::move(generator_sets),
                  std::move(model), std::move(report)};
  return out;
}

void check_norm_match(double physical_sq, double model_sq, double tol) {
  if (std::abs(physical_sq - model_sq) >= tol) {
    throw std::invalid_argument(
        "squared norm of the state (" + std::to_string(physical_sq) +
        ") does not match the squared norm of the target coefficients (" +
        std::to_string(model_sq) + ")");
  }
}

}  // namespace

Factorization::Factorization(std::vector<Index> factor_dims)
    : dims(std::move(factor_dims)) {
  if (dims.size() < 2) {
    throw std::invalid_argument("Factorization: need at least two factors");
  }
  total = 1;
  for (Index k : dims) {
    if (k < 2) {
      throw std::invalid_argument("Factorization: every factor must be >= 2");
    }
    total *= k;
  }
}

TailoredTPS tailor_bipartite(const Vector& psi, Index k, Index l,
                             const std::vector<Complex>& lambdas, double tol) {
  Factorization factorization({k, l});
  if (psi.size() != factorization.total) {
    throw std::invalid_argument(
        "tailor_bipartite: state dimension " + std::to_string(psi.size()) +
        " does not equal k*l = " + std::to_string(factorization.total));
  }
  const Vector model = schmidt_state(lambdas, k, l);
  check_norm_match(psi.squaredNorm(), model.squaredNorm(), tol);
  return build_tailored(psi, std::move(factorization), model, tol);
}

TailoredTPS tailor_multipartite(const Vector& psi,
                                const Factorization& factorization,
                                const Vector& target_coeffs, double tol) {
  if (psi.size() != factorization.total) {
    throw std::invalid_argument(
        "tailor_multipartite: state dimension " + std::to_string(psi.size()) +
        " does not match the factorization total " +
        std::to_string(factorization.total));
  }
  if (target_coeffs.size() != factorization.total) {
    throw std::invalid_argument(
        "tailor_multipartite: expected " + std::to_string(factorization.total) +
        " target coefficients, got " + std::to_string(target_coeffs.size()));
  }
  check_norm_match(psi.squaredNorm(), target_coeffs.squaredNorm(), tol);
  return build_tailored(psi, factorization, target_coeffs, tol);
}

PauliMap pauli_decompose(const Matrix& op, int n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("pauli_decompose: qubit count out of range");
  }
  const Index dim = Index(1) << n;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument(
        "pauli_decompose: operator is not 2^n x 2^n for n = " +
        std::to_string(n));
  }

  Matrix pauli[4];
  pauli[0] = Matrix::Identity(2, 2);
  pauli[1] = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  pauli[2] = (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  pauli[3] = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  static const char kLabels[4] = {'I', 'X', 'Y', 'Z'};

  PauliMap out;
  const std::size_t count = std::size_t(1) << (2 * n);
  for (std::size_t code = 0; code < count; ++code) {
    std::string label(static_cast<std::size_t>(n), 'I');
    Matrix string_op = Matrix::Identity(1, 1);
    // Leftmost character is the first (major) tensor factor.
    for (int q = 0; q < n; ++q) {
      const std::size_t digit = (code >> (2 * (n - 1 - q))) & 3;
      label[static_cast<std::size_t>(q)] = kLabels[digit];
      string_op = kron(string_op, pauli[digit]);
    }
    const Complex coeff =
        frobenius_inner(string_op, op) / static_cast<double>(dim);
    if (std::abs(coeff) >= kPauliPruneTol) {
      out.emplace(std::move(label), coeff);
    }
  }
  return out;
}

ExampleD4 example_d4(double lambda1, double lambda2) {
  if (std::abs(lambda1 * lambda1 + lambda2 * lambda2 - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "example_d4: lambda1^2 + lambda2^2 must equal 1");
  }
  ExampleD4 out;
  out.u = Matrix::Zero(4, 4);
  out.u(0, 0) = lambda1;
  out.u(0, 3) = lambda2;
  out.u(1, 1) = 1.0;
  out.u(2, 2) = 1.0;
  out.u(3, 0) = -lambda2;
  out.u(3, 3) = lambda1;

  const Matrix eye2 = Matrix::Identity(2, 2);
  const Matrix sigma[3] = {
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  // The matrix above carries the model Schmidt state l1 e_0 + l2 e_3 onto the
  // physical basis state e_0, so the transported observables are u O u^dag.
  for (int j = 0; j < 3; ++j) {
    const Matrix a = out.u * kron(sigma[j], eye2) * out.u.adjoint();
    const Matrix b = out.u * kron(eye2, sigma[j]) * out.u.adjoint();
    out.a_decompositions[static_cast<std::size_t>(j)] = pauli_decompose(a, 2);
    out.b_decompositions[static_cast<std::size_t>(j)] = pauli_decompose(b, 2);
  }
  return out;
}

}  // namespace tpstailor
