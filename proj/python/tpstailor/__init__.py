# This code is part of tpstailor.
#
# (C) Copyright tpstailor contributors 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may obtain
# a copy of this license in the LICENSE file in the root directory of this
# source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Tailored observable algebras and induced tensor product structures.

Given any pure state of a d-dimensional Hilbert space and any factorization
of d, construct observable subalgebras inducing a tensor product structure in
which that state has a prescribed Schmidt spectrum, and verify the
independence and completeness conditions numerically.
"""

import numpy as _np

from ._core import (
    DEFAULT_TOL,
    AlgebraBasis,
    Factorization,
    SchmidtData,
    SpinRep,
    TailoredTPS,
    VerificationError,
    ZanardiReport,
    commutant,
    double_commutant_check,
    entanglement_entropy,
    example_d4,
    frobenius_inner,
    generated_algebra,
    gram_schmidt_complete,
    kron,
    matmul,
    pauli_decompose,
    schmidt_decompose,
    schmidt_state,
    span_basis,
    spin_matrices,
    svd,
    tailor_bipartite,
    vandermonde_det,
    verify_zanardi,
)
from ._core import tailor_multipartite as _tailor_multipartite_flat

__all__ = [
    "DEFAULT_TOL",
    "AlgebraBasis",
    "Factorization",
    "SchmidtData",
    "SpinRep",
    "TailoredTPS",
    "VerificationError",
    "ZanardiReport",
    "commutant",
    "double_commutant_check",
    "entanglement_entropy",
    "example_d4",
    "frobenius_inner",
    "generated_algebra",
    "gram_schmidt_complete",
    "kron",
    "matmul",
    "pauli_decompose",
    "schmidt_decompose",
    "schmidt_state",
    "span_basis",
    "spin_matrices",
    "svd",
    "tailor_bipartite",
    "tailor_multipartite",
    "vandermonde_det",
    "verify_zanardi",
]

__version__ = "0.1.0"


def tailor_multipartite(psi, dims, target_coeffs, tol=DEFAULT_TOL):
    """Tailor observables for a multipartite expansion target.

    ``target_coeffs`` may be given either as an array of shape ``dims`` (the
    coefficient of ``|i_1 ... i_N>`` at index ``[i_1, ..., i_N]``) or already
    flattened in C order, which is the first-factor-major convention used by
    :func:`kron`.
    """
    factorization = dims if isinstance(dims, Factorization) else Factorization(list(dims))
    arr = _np.asarray(target_coeffs, dtype=complex)
    shape = tuple(factorization.dims)
    if arr.ndim > 1 and arr.shape != shape:
        raise ValueError(
            f"target_coeffs shape {arr.shape} does not match factors {shape}"
        )
    flat = arr.ravel(order="C")
    return _tailor_multipartite_flat(psi, factorization, flat, tol)
