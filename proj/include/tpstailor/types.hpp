// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tpstailor {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default relative tolerance for rank decisions, closure residuals and
/// norm-matching checks. Every tolerance-taking entry point defaults to this;
/// thresholds are applied as `tol * max(1, scale)` so they are scale-invariant
/// for quantities above unit size.
inline constexpr double kDefaultTol = 1e-10;

}  // namespace tpstailor
