// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <span>

#include "tpstailor/types.hpp"

namespace tpstailor {

/// Spin-s representation matrices of su(2) on C^d, d = 2s+1, in units with
/// hbar = 1. The magnetic quantum number m runs DESCENDING over rows: row 0
/// corresponds to m = +s, so s_z = diag(s, s-1, ..., -s).
struct SpinRep {
  Index dim;   // d = 2s + 1
  int two_s;   // spin stored as the integer 2s to keep half-integers exact
  Matrix s_z;
  Matrix s_plus;
  Matrix s_minus;
  Matrix s_x;
  Matrix s_y;

  double spin() const { return 0.5 * two_s; }
};

/// Build the spin-(d-1)/2 representation on C^d. Satisfies, up to rounding:
/// s_plus = s_minus^dagger, s_x = (s_plus+s_minus)/2,
/// s_y = (s_plus-s_minus)/(2i), [s_x,s_y] = i s_z (and cyclic), and the
/// Casimir identity s_x^2 + s_y^2 + s_z^2 = s(s+1) 1_d.
/// Throws std::invalid_argument for d < 2.
SpinRep spin_matrices(Index d);

/// prod_{i>j} (x_i - x_j): the determinant of the power matrix a_{ij} =
/// x_i^j (j = 0..n-1). Exactly zero when any two entries coincide.
Complex vandermonde_det(std::span<const Complex> xs);

}  // namespace tpstailor
