// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace tpstailor {

AlgebraBasis generated_algebra(const std::vector<Matrix>& generators, Index d,
                               double tol) {
  if (d <= 0) {
    throw std::invalid_argument("generated_algebra: ambient dimension must be positive");
  }
  for (const Matrix& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw std::invalid_argument("generated_algebra: generator is not " +
                                  std::to_string(d) + "x" + std::to_string(d));
    }
  }

  const Index full = d * d;
  SpanTracker span(full, tol, full);
  std::vector<Matrix> basis;
  auto admit = [&](const Matrix& candidate) {
    if (!span.try_admit(vec(candidate))) {
      return false;
    }
    basis.push_back(unvec(span.last(), d, d));
    return true;
  };

  admit(Matrix::Identity(d, d));
  for (const Matrix& g : generators) {
    admit(g);
  }

  // Round over the snapshot taken at round start; elements admitted during a
  // round enter products only in the next round, keeping the admitted order
  // independent of evaluation strategy.
  while (static_cast<Index>(basis.size()) < full) {
    const std::size_t round_size = basis.size();
    bool grew = false;
    for (std::size_t i = 0; i < round_size && static_cast<Index>(basis.size()) < full; ++i) {
      for (std::size_t j = 0; j < round_size && static_cast<Index>(basis.size()) < full; ++j) {
        grew |= admit(basis[i] * basis[j]);
      }
    }
    if (!grew) {
      break;
    }
  }
  return AlgebraBasis{d, std::move(basis), tol};
}

AlgebraBasis commutant(const AlgebraBasis& algebra) {
  const Index d = algebra.ambient_dim;
  if (d <= 0) {
    throw std::invalid_argument("commutant: invalid ambient dimension");
  }
  const Index dd = d * d;
  const Index n = algebra.size();
  if (n == 0) {
    // Empty span commutes with everything; hand back the unit-matrix basis.
    std::vector<Matrix> everything;
    everything.reserve(static_cast<std::size_t>(dd));
    for (Index c = 0; c < d; ++c) {
      for (Index r = 0; r < d; ++r) {
        Matrix e = Matrix::Zero(d, d);
        e(r, c) = Complex(1.0, 0.0);
        everything.push_back(e);
      }
    }
    return AlgebraBasis{d, std::move(everything), algebra.closure_tol};
  }

  // Stack the linear maps B -> A_i B - B A_i over operator space
  // (column-major vec): vec(AB - BA) = (1 (x) A - A^T (x) 1) vec(B).
  const Matrix eye = Matrix::Identity(d, d);
  Matrix stacked(n * dd, dd);
  for (Index i = 0; i < n; ++i) {
    const Matrix& a = algebra.basis[static_cast<std::size_t>(i)];
    if (a.rows() != d || a.cols() != d) {
      throw std::invalid_argument("commutant: basis element has wrong shape");
    }
    stacked.middleRows(i * dd, dd) = kron(eye, a) - kron(a.transpose(), eye);
  }

  Eigen::JacobiSVD<Matrix> solver(stacked, Eigen::ComputeFullV);
  const RealVector& sigma = solver.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  // Basis elements are Frobenius-normalized, so genuine non-commutation shows
  // up at unit scale; the max(1, .) guard keeps an all-commuting stack (pure
  // rounding noise) from being mistaken for rank.
  const double cutoff = algebra.closure_tol * std::max(1.0, sigma_max);
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) {
    ++rank;
  }

  std::vector<Matrix> null_basis;
  null_basis.reserve(static_cast<std::size_t>(dd - rank));
  const Matrix& v = solver.matrixV();
  for (Index c = rank; c < dd; ++c) {
    null_basis.push_back(unvec(v.col(c), d, d));
  }
  return AlgebraBasis{d, std::move(null_basis), algebra.closure_tol};
}

ZanardiReport verify_zanardi(const std::vector<AlgebraBasis>& algebras,
                             Index d, double tol) {
  if (algebras.size() < 2) {
    throw std::invalid_argument("verify_zanardi: need at least two algebras");
  }
  for (const AlgebraBasis& a : algebras) {
    if (a.ambient_dim != d) {
      throw std::invalid_argument("verify_zanardi: ambient dimension mismatch");
    }
  }

  double max_commutator = 0.0;
  for (std::size_t p = 0; p < algebras.size(); ++p) {
    for (std::size_t q = p + 1; q < algebras.size(); ++q) {
      for (const Matrix& a : algebras[p].basis) {
        for (const Matrix& b : algebras[q].basis) {
          max_commutator = std::max(max_commutator, (a * b - b * a).norm());
        }
      }
    }
  }

  std::vector<Matrix> joint_generators;
  for (const AlgebraBasis& a : algebras) {
    joint_generators.insert(joint_generators.end(), a.basis.begin(), a.basis.end());
  }
  const AlgebraBasis joint = generated_algebra(joint_generators, d, tol);

  std::int64_t dims_product = 1;
  for (const AlgebraBasis& a : algebras) {
    dims_product *= static_cast<std::int64_t>(a.size());
  }

  const Index full = d * d;
  ZanardiReport report;
  report.independence_max_commutator = max_commutator;
  report.generated_dim = joint.size();
  report.dims_product = dims_product;
  report.is_independent = max_commutator < tol;
  report.is_complete =
      joint.size() == full && dims_product == static_cast<std::int64_t>(full);
  report.tol = tol;
  return report;
}

BicommutantDims double_commutant_check(const AlgebraBasis& algebra) {
  const AlgebraBasis first = commutant(algebra);
  const AlgebraBasis second = commutant(first);
  return BicommutantDims{algebra.size(), first.size(), second.size()};
}

}  // namespace tpstailor
