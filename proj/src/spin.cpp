// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "tpstailor/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace tpstailor {

SpinRep spin_matrices(Index d) {
  if (d < 2) {
    throw std::invalid_argument("spin_matrices: dimension must be at least 2");
  }
  const double s = 0.5 * static_cast<double>(d - 1);

  SpinRep rep;
  rep.dim = d;
  rep.two_s = static_cast<int>(d - 1);

  rep.s_z = Matrix::Zero(d, d);
  for (Index r = 0; r < d; ++r) {
    rep.s_z(r, r) = Complex(s - static_cast<double>(r), 0.0);
  }

  // Raising operator: column c holds m' = s - c; it connects to m' + 1 one
  // row up, with amplitude sqrt(s(s+1) - m'(m'+1)).
  rep.s_plus = Matrix::Zero(d, d);
  for (Index c = 1; c < d; ++c) {
    const double m_from = s - static_cast<double>(c);
    rep.s_plus(c - 1, c) =
        Complex(std::sqrt(s * (s + 1.0) - m_from * (m_from + 1.0)), 0.0);
  }
  rep.s_minus = rep.s_plus.adjoint();
  rep.s_x = 0.5 * (rep.s_plus + rep.s_minus);
  rep.s_y = (rep.s_plus - rep.s_minus) / Complex(0.0, 2.0);
  return rep;
}

Complex vandermonde_det(std::span<const Complex> xs) {
  Complex det(1.0, 0.0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      det *= xs[i] - xs[j];
    }
  }
  return det;
}

}  // namespace tpstailor
