// This code is part of tpstailor.
//
// (C) Copyright tpstailor contributors 2026.
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpstailor/tpstailor.hpp"

namespace py = pybind11;
using namespace tpstailor;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Tailored observable algebras and induced tensor product structures "
      "for finite-dimensional quantum systems.";

  py::register_exception<VerificationError>(m, "VerificationError");

  py::class_<SpinRep>(m, "SpinRep", "Spin-s representation matrices on C^d.")
      .def_readonly("dim", &SpinRep::dim)
      .def_readonly("two_s", &SpinRep::two_s)
      .def_property_readonly("spin", &SpinRep::spin)
      .def_readonly("s_z", &SpinRep::s_z)
      .def_readonly("s_plus", &SpinRep::s_plus)
      .def_readonly("s_minus", &SpinRep::s_minus)
      .def_readonly("s_x", &SpinRep::s_x)
      .def_readonly("s_y", &SpinRep::s_y);

  py::class_<AlgebraBasis>(m, "AlgebraBasis",
                           "Frobenius-orthonormal basis of an operator algebra.")
      .def_readonly("ambient_dim", &AlgebraBasis::ambient_dim)
      .def_readonly("basis", &AlgebraBasis::basis)
      .def_readonly("closure_tol", &AlgebraBasis::closure_tol)
      .def("__len__", &AlgebraBasis::size);

  py::class_<ZanardiReport>(m, "ZanardiReport",
                            "Independence/completeness verification outcome.")
      .def_readonly("independence_max_commutator",
                    &ZanardiReport::independence_max_commutator)
      .def_readonly("generated_dim", &ZanardiReport::generated_dim)
      .def_readonly("dims_product", &ZanardiReport::dims_product)
      .def_readonly("is_independent", &ZanardiReport::is_independent)
      .def_readonly("is_complete", &ZanardiReport::is_complete)
      .def_readonly("tol", &ZanardiReport::tol)
      .def("__repr__", [](const ZanardiReport& r) {
        return "ZanardiReport(independent=" +
               std::string(r.is_independent ? "True" : "False") +
               ", complete=" + std::string(r.is_complete ? "True" : "False") +
               ", generated_dim=" + std::to_string(r.generated_dim) + ")";
      });

  py::class_<SchmidtData>(m, "SchmidtData",
                          "Schmidt coefficients, factor bases and phases.")
      .def_readonly("k", &SchmidtData::k)
      .def_readonly("l", &SchmidtData::l)
      .def_readonly("coefficients", &SchmidtData::coefficients)
      .def_readonly("left_basis", &SchmidtData::left_basis)
      .def_readonly("right_basis", &SchmidtData::right_basis)
      .def_readonly("phases", &SchmidtData::phases);

  py::class_<Factorization>(m, "Factorization",
                            "A factorization d = k_1 * ... * k_N, k_i >= 2.")
      .def(py::init<std::vector<Index>>(), py::arg("dims"))
      .def_readonly("dims", &Factorization::dims)
      .def_readonly("total", &Factorization::total);

  py::class_<TailoredTPS>(m, "TailoredTPS",
                          "Unitary, generator sets and report of a tailored "
                          "tensor product structure.")
      .def_readonly("u", &TailoredTPS::u)
      .def_readonly("factorization", &TailoredTPS::factorization)
      .def_readonly("generator_sets", &TailoredTPS::generator_sets)
      .def_readonly("model_state", &TailoredTPS::model_state)
      .def_readonly("report", &TailoredTPS::report);

  // core linear algebra
  m.def("matmul", &matmul, py::arg("a"), py::arg("b"),
        "Matrix product with an explicit shape check.");
  m.def("kron", &kron, py::arg("a"), py::arg("b"),
        "Tensor product, first factor major: e_j (x) e_k -> e_{j*l+k}.");
  m.def(
      "svd",
      [](const Matrix& matrix) {
        const SvdResult r = svd(matrix);
        return py::make_tuple(r.left, r.singular_values, r.right_conj);
      },
      py::arg("m"),
      "Full SVD as (left, singular_values, right_conj) with "
      "m = left @ diag @ right_conj.");
  m.def("gram_schmidt_complete", &gram_schmidt_complete, py::arg("seeds"),
        py::arg("dim"), py::arg("tol") = kDefaultTol,
        "Orthonormal basis (as columns) extending the seeds with standard "
        "basis vectors, deterministically.");
  m.def("frobenius_inner", &frobenius_inner, py::arg("a"), py::arg("b"),
        "Hilbert-Schmidt inner product Tr(a^H b).");
  m.def("span_basis", &span_basis, py::arg("ops"), py::arg("tol") = kDefaultTol,
        "Frobenius-orthonormal basis of the span of the given operators.");

  // spin representations
  m.def("spin_matrices", &spin_matrices, py::arg("dim"),
        "Spin-(d-1)/2 representation with s_z = diag(s, ..., -s).");
  m.def(
      "vandermonde_det",
      [](const std::vector<Complex>& xs) { return vandermonde_det(xs); },
      py::arg("xs"), "prod_{i>j} (x_i - x_j); zero iff entries repeat.");

  // operator algebras
  m.def("generated_algebra", &generated_algebra, py::arg("generators"),
        py::arg("dim"), py::arg("tol") = kDefaultTol,
        "Multiplicative span closure of {identity} + generators.");
  m.def("commutant", &commutant, py::arg("algebra"),
        "Orthonormal basis of everything commuting with the given algebra.");
  m.def("verify_zanardi", &verify_zanardi, py::arg("algebras"), py::arg("dim"),
        py::arg("tol") = kDefaultTol,
        "Check mutual commutation and joint completeness of the algebras.");
  m.def(
      "double_commutant_check",
      [](const AlgebraBasis& a) {
        const BicommutantDims dims = double_commutant_check(a);
        return py::make_tuple(dims.dim_algebra, dims.dim_commutant,
                              dims.dim_bicommutant);
      },
      py::arg("algebra"), "(dim A, dim A', dim A'').");

  // Schmidt machinery
  m.def("schmidt_decompose", &schmidt_decompose, py::arg("psi"), py::arg("k"),
        py::arg("l"),
        "Schmidt decomposition of psi with respect to the k x l split.");
  m.def("entanglement_entropy", &entanglement_entropy, py::arg("schmidt_data"),
        py::arg("tol") = kDefaultTol,
        "-sum c^2 log2 c^2 for normalized Schmidt coefficients.");
  m.def("schmidt_state", &schmidt_state, py::arg("lambdas"), py::arg("k"),
        py::arg("l"), "sum_i lambdas[i] e_i (x) e_i in C^{k*l}.");

  // tailoring
  m.def("tailor_bipartite", &tailor_bipartite, py::arg("psi"), py::arg("k"),
        py::arg("l"), py::arg("lambdas"), py::arg("tol") = kDefaultTol,
        "Construct observables under which psi has Schmidt coefficients "
        "lambdas for an induced k x l structure.");
  m.def("tailor_multipartite", &tailor_multipartite, py::arg("psi"),
        py::arg("factorization"), py::arg("target_coeffs"),
        py::arg("tol") = kDefaultTol,
        "Multipartite tailoring; target_coeffs is flat, first factor major.");
  m.def("pauli_decompose", &pauli_decompose, py::arg("op"), py::arg("n"),
        "Pauli-string expansion of a 2^n x 2^n operator as {string: coeff}.");
  m.def(
      "example_d4",
      [](double lambda1, double lambda2) {
        const ExampleD4 ex = example_d4(lambda1, lambda2);
        return py::make_tuple(ex.u, ex.a_decompositions, ex.b_decompositions);
      },
      py::arg("lambda1"), py::arg("lambda2"),
      "The explicit d = 4 worked example: (u, a_decompositions, "
      "b_decompositions).");

  m.attr("DEFAULT_TOL") = kDefaultTol;
}
