// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace tpstailor {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  return a * b;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SvdResult svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{solver.matrixU(), solver.singularValues(),
                   solver.matrixV().adjoint()};
}

SpanTracker::SpanTracker(Index ambient_dim, double tol, Index max_size)
    : columns_(ambient_dim, std::min(max_size, ambient_dim)), tol_(tol) {
  if (ambient_dim <= 0) {
    throw std::invalid_argument("SpanTracker: ambient dimension must be positive");
  }
}

bool SpanTracker::try_admit(const Vector& candidate) {
  if (candidate.size() != columns_.rows()) {
    throw std::invalid_argument("SpanTracker: candidate has wrong dimension");
  }
  if (size_ == columns_.cols()) {
    return false;
  }
  Vector residual = candidate;
  // Projection applied twice; a second pass restores orthogonality lost to
  // cancellation when the candidate is nearly inside the span.
  for (int pass = 0; pass < 2; ++pass) {
    auto basis_cols = columns_.leftCols(size_);
    Vector overlaps = basis_cols.adjoint() * residual;
    residual.noalias() -= basis_cols * overlaps;
  }
  const double residual_norm = residual.norm();
  if (residual_norm <= tol_ * std::max(1.0, candidate.norm())) {
    return false;
  }
  columns_.col(size_) = residual / residual_norm;
  ++size_;
  return true;
}

Matrix gram_schmidt_complete(const std::vector<Vector>& seeds, Index dim,
                             double tol) {
  if (dim <= 0) {
    throw std::invalid_argument("gram_schmidt_complete: dimension must be positive");
  }
  SpanTracker span(dim, tol, dim);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i].size() != dim) {
      throw std::invalid_argument(
          "gram_schmidt_complete: seed " + std::to_string(i) +
          " has dimension " + std::to_string(seeds[i].size()) +
          ", expected " + std::to_string(dim));
    }
    if (!span.try_admit(seeds[i])) {
      throw std::invalid_argument(
          "gram_schmidt_complete: seed vectors numerically dependent at index " +
          std::to_string(i));
    }
  }
  for (Index j = 0; j < dim && span.size() < dim; ++j) {
    Vector unit = Vector::Zero(dim);
    unit[j] = Complex(1.0, 0.0);
    span.try_admit(unit);
  }
  if (span.size() != dim) {
    // The standard basis spans C^dim, so this is unreachable for any sane tol.
    throw std::runtime_error("gram_schmidt_complete: completion failed");
  }
  return span.basis();
}

Complex frobenius_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_inner: shape mismatch");
  }
  return (a.array().conjugate() * b.array()).sum();
}

std::vector<Matrix> span_basis(const std::vector<Matrix>& ops, double tol) {
  if (ops.empty()) {
    return {};
  }
  const Index rows = ops.front().rows();
  const Index cols = ops.front().cols();
  SpanTracker span(rows * cols, tol, rows * cols);
  for (const Matrix& op : ops) {
    if (op.rows() != rows || op.cols() != cols) {
      throw std::invalid_argument("span_basis: operators must share one shape");
    }
    span.try_admit(vec(op));
  }
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(span.size()));
  const Matrix basis = span.basis();
  for (Index i = 0; i < span.size(); ++i) {
    out.push_back(unvec(basis.col(i), rows, cols));
  }
  return out;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw std::invalid_argument("unvec: size does not match target shape");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace tpstailor
