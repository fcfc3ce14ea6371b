#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "test_helpers.hpp"
#include "tpstailor/tailor.hpp"

using namespace tpstailor;
using namespace test_helpers;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<double> sorted_magnitudes(const std::vector<Complex>& lambdas) {
  std::vector<double> mags;
  for (const Complex& l : lambdas) {
    mags.push_back(std::abs(l));
  }
  std::sort(mags.begin(), mags.end(), std::greater<>());
  return mags;
}

void check_postconditions(const TailoredTPS& tps, const Vector& psi,
                          Index k, Index l,
                          const std::vector<Complex>& lambdas) {
  const Index d = k * l;
  CHECK((tps.u.adjoint() * tps.u - Matrix::Identity(d, d)).norm() < 1e-10);
  CHECK((tps.u * tps.model_state - psi).norm() < 1e-10);

  const SchmidtData s = schmidt_decompose(tps.u.adjoint() * psi, k, l);
  const std::vector<double> expected = sorted_magnitudes(lambdas);
  for (Index i = 0; i < s.coefficients.size(); ++i) {
    CHECK(std::abs(s.coefficients(i) - expected[static_cast<std::size_t>(i)]) <
          1e-10);
  }

  CHECK(tps.report.is_independent);
  CHECK(tps.report.is_complete);
  CHECK(tps.report.generated_dim == d * d);
}

}  // namespace

TEST_CASE("maximal entanglement tailored onto a basis state") {
  const Vector psi = unit_vector(4, 0);
  const std::vector<Complex> lambdas{Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)};
  const TailoredTPS tps = tailor_bipartite(psi, 2, 2, lambdas);
  check_postconditions(tps, psi, 2, 2, lambdas);

  const SchmidtData s = schmidt_decompose(tps.u.adjoint() * psi, 2, 2);
  CHECK(entanglement_entropy(s) == doctest::Approx(1.0).epsilon(1e-10));

  // A transported two-sided operator exists and is nonlocal in general: check
  // u (sigma_z (x) sigma_z) u^dagger is well-formed and Hermitian.
  const Matrix zz = tps.u * kron(sigma_z(), sigma_z()) * tps.u.adjoint();
  CHECK((zz - zz.adjoint()).norm() < 1e-12);
}

TEST_CASE("separable target leaves a basis state separable") {
  const Vector psi = unit_vector(4, 0);
  const std::vector<Complex> lambdas{Complex(1, 0), Complex(0, 0)};
  const TailoredTPS tps = tailor_bipartite(psi, 2, 2, lambdas);
  check_postconditions(tps, psi, 2, 2, lambdas);
  const SchmidtData s = schmidt_decompose(tps.u.adjoint() * psi, 2, 2);
  CHECK(entanglement_entropy(s) < 1e-12);
  // Model state is psi itself here, so u fixes psi.
  CHECK((tps.u * psi - psi).norm() < 1e-12);
}

TEST_CASE("random d = 6 state with prescribed (0.8, 0.6) spectrum") {
  auto rng = make_rng(501);
  const Vector psi = random_unit_state(6, rng);
  const std::vector<Complex> lambdas{Complex(0.8, 0), Complex(0.6, 0)};
  const TailoredTPS tps = tailor_bipartite(psi, 2, 3, lambdas);
  check_postconditions(tps, psi, 2, 3, lambdas);
  CHECK(tps.report.generated_dim == 36);

  // Cross-check the coefficients against the reduced Gram-matrix eigenvalues.
  const Vector model = tps.u.adjoint() * psi;
  Matrix m(2, 3);
  for (Index j = 0; j < 2; ++j) {
    for (Index mm = 0; mm < 3; ++mm) {
      m(j, mm) = model[j * 3 + mm];
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m * m.adjoint());
  CHECK(std::abs(std::sqrt(solver.eigenvalues()(1)) - 0.8) < 1e-10);
  CHECK(std::abs(std::sqrt(solver.eigenvalues()(0)) - 0.6) < 1e-10);
}

TEST_CASE("complex Schmidt coefficients are honored up to phase") {
  auto rng = make_rng(502);
  const Vector psi = random_unit_state(9, rng);
  const std::vector<Complex> lambdas{Complex(0.6, 0.48), Complex(0.0, 0.5),
                                     Complex(0.4, 0.0)};
  // Rescale so the magnitudes square-sum to 1, matching the unit state.
  std::vector<Complex> normalized = lambdas;
  double total = 0;
  for (const Complex& l : lambdas) total += std::norm(l);
  for (Complex& l : normalized) l /= std::sqrt(total);
  const TailoredTPS tps = tailor_bipartite(psi, 3, 3, normalized);
  check_postconditions(tps, psi, 3, 3, normalized);
  // The model state keeps the complex phases verbatim.
  CHECK((tps.model_state - schmidt_state(normalized, 3, 3)).norm() == 0.0);
}

TEST_CASE("unnormalized states are supported when norms match") {
  auto rng = make_rng(503);
  const Vector psi = 2.5 * random_unit_state(4, rng);
  const std::vector<Complex> lambdas{Complex(2.0, 0), Complex(1.5, 0)};
  const TailoredTPS tps = tailor_bipartite(psi, 2, 2, lambdas);
  check_postconditions(tps, psi, 2, 2, lambdas);
}

TEST_CASE("tailor_bipartite rejects bad inputs") {
  auto rng = make_rng(504);
  const Vector psi = random_unit_state(4, rng);
  CHECK_THROWS_AS(
      tailor_bipartite(psi, 2, 3, {Complex(1, 0), Complex(0, 0)}),
      std::invalid_argument); // k*l != dim
  CHECK_THROWS_AS(tailor_bipartite(psi, 2, 2, {Complex(1, 0)}),
                  std::invalid_argument); // wrong lambda count
  CHECK_THROWS_AS(
      tailor_bipartite(psi, 2, 2, {Complex(0.5, 0), Complex(0.5, 0)}),
      std::invalid_argument); // norm mismatch
  CHECK_THROWS_AS(
      tailor_bipartite(psi, 1, 4, {Complex(1, 0)}),
      std::invalid_argument); // factors must be >= 2
}

TEST_CASE("tailoring is deterministic") {
  auto rng = make_rng(505);
  const Vector psi = random_unit_state(6, rng);
  const std::vector<Complex> lambdas{Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)};
  const TailoredTPS first = tailor_bipartite(psi, 2, 3, lambdas);
  const TailoredTPS second = tailor_bipartite(psi, 2, 3, lambdas);
  CHECK((first.u - second.u).norm() == 0.0);
}

TEST_CASE("totally mixed state is untouched by any tailored unitary") {
  auto rng = make_rng(506);
  const Index d = 6;
  const Vector psi = random_unit_state(d, rng);
  const TailoredTPS tps = tailor_bipartite(
      psi, 2, 3, {Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)});
  const Matrix mixed = Matrix::Identity(d, d) / static_cast<double>(d);
  CHECK((tps.u * mixed * tps.u.adjoint() - mixed).norm() < 1e-14);
}

TEST_CASE("GHZ coefficients tailored onto a basis state of d = 8") {
  const Vector psi = unit_vector(8, 0);
  Vector target = Vector::Zero(8);
  target[0] = Complex(kInvSqrt2, 0);
  target[7] = Complex(kInvSqrt2, 0);
  const Factorization factorization({2, 2, 2});
  const TailoredTPS tps = tailor_multipartite(psi, factorization, target);

  CHECK((tps.u.adjoint() * tps.u - Matrix::Identity(8, 8)).norm() < 1e-10);
  const Vector model = tps.u.adjoint() * psi;
  CHECK((model - target).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(tps.report.is_independent);
  CHECK(tps.report.is_complete);
  CHECK(tps.report.generated_dim == 64);
  CHECK(tps.generator_sets.size() == 3);

  // Pairwise commutators of the transported generators across factors.
  for (std::size_t f = 0; f < 3; ++f) {
    for (std::size_t g = f + 1; g < 3; ++g) {
      for (const Matrix& a : tps.generator_sets[f]) {
        for (const Matrix& b : tps.generator_sets[g]) {
          CHECK((a * b - b * a).norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("product target reduces to a relabeling") {
  const Vector psi = unit_vector(8, 0);
  Vector target = Vector::Zero(8);
  target[0] = Complex(1, 0);
  const TailoredTPS tps =
      tailor_multipartite(psi, Factorization({2, 2, 2}), target);
  CHECK((tps.u.adjoint() * psi - target).norm() < 1e-12);
}

TEST_CASE("bipartite and two-factor multipartite constructions agree") {
  auto rng = make_rng(507);
  const Index k = 2, l = 3;
  const Vector psi = random_unit_state(k * l, rng);
  const std::vector<Complex> lambdas{Complex(0.8, 0), Complex(0.6, 0)};
  const TailoredTPS bi = tailor_bipartite(psi, k, l, lambdas);
  const TailoredTPS multi = tailor_multipartite(
      psi, Factorization({k, l}), schmidt_state(lambdas, k, l));
  CHECK((bi.u - multi.u).norm() < 1e-15);
  const SchmidtData sb = schmidt_decompose(bi.u.adjoint() * psi, k, l);
  const SchmidtData sm = schmidt_decompose(multi.u.adjoint() * psi, k, l);
  CHECK((sb.coefficients - sm.coefficients).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inductive two-step construction matches the direct guarantees") {
  // Build the GHZ structure on d = 8 by hand in two stages: first tailor the
  // 2 x 4 split, then rotate inside the right factor so its basis states
  // |0>_4 and |1>_4 land on |00> and |11>. The composed unitary must satisfy
  // the same postconditions as the direct three-factor construction.
  const Vector psi = unit_vector(8, 0);
  const std::vector<Complex> lambdas{Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)};
  const TailoredTPS stage_one = tailor_bipartite(psi, 2, 4, lambdas);

  // v maps e_0 -> e_0 and e_1 -> e_3 inside C^4, carrying the Schmidt pairs
  // of the 2 x 4 model onto the GHZ pattern; built from paired Gram-Schmidt
  // completions.
  const Matrix source =
      gram_schmidt_complete({unit_vector(4, 0), unit_vector(4, 1)}, 4);
  const Matrix dest =
      gram_schmidt_complete({unit_vector(4, 0), unit_vector(4, 3)}, 4);
  const Matrix v = dest * source.adjoint();

  const Matrix composed = stage_one.u * kron(Matrix::Identity(2, 2), v).adjoint();

  Vector ghz = Vector::Zero(8);
  ghz[0] = Complex(kInvSqrt2, 0);
  ghz[7] = Complex(kInvSqrt2, 0);
  CHECK((composed.adjoint() * psi - ghz).cwiseAbs().maxCoeff() < 1e-12);

  // Transport single-qubit generators through the composed unitary and verify
  // the three algebras they generate.
  const SpinRep qubit = spin_matrices(2);
  std::vector<AlgebraBasis> algebras;
  for (int f = 0; f < 3; ++f) {
    const Index prefix = f == 0 ? 1 : (f == 1 ? 2 : 4);
    const Index suffix = f == 0 ? 4 : (f == 1 ? 2 : 1);
    std::vector<Matrix> gens;
    for (const Matrix* s : {&qubit.s_x, &qubit.s_y, &qubit.s_z}) {
      Matrix embedded = *s;
      if (suffix > 1) embedded = kron(embedded, Matrix::Identity(suffix, suffix));
      if (prefix > 1) embedded = kron(Matrix::Identity(prefix, prefix), embedded);
      gens.push_back(composed * embedded * composed.adjoint());
    }
    algebras.push_back(generated_algebra(gens, 8));
  }
  const ZanardiReport report = verify_zanardi(algebras, 8);
  CHECK(report.is_independent);
  CHECK(report.is_complete);
}

TEST_CASE("tailor_multipartite rejects bad inputs") {
  const Vector psi = unit_vector(8, 0);
  Vector target = Vector::Zero(8);
  target[0] = Complex(1, 0);
  CHECK_THROWS_AS(tailor_multipartite(unit_vector(6, 0), Factorization({2, 2, 2}), target),
                  std::invalid_argument);
  CHECK_THROWS_AS(tailor_multipartite(psi, Factorization({2, 2, 2}), Vector::Ones(4)),
                  std::invalid_argument);
  Vector wrong_norm = target * Complex(0.5, 0);
  CHECK_THROWS_AS(tailor_multipartite(psi, Factorization({2, 2, 2}), wrong_norm),
                  std::invalid_argument);
  CHECK_THROWS_AS(Factorization({8}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization({1, 8}), std::invalid_argument);
}

TEST_CASE("pauli_decompose on elementary operators") {
  const PauliMap xi = pauli_decompose(kron(sigma_x(), Matrix::Identity(2, 2)), 2);
  REQUIRE(xi.size() == 1);
  CHECK(xi.count("XI") == 1);
  CHECK(std::abs(xi.at("XI") - Complex(1, 0)) < 1e-15);

  auto rng = make_rng(508);
  const Matrix op = random_matrix(4, 4, rng);
  const PauliMap decomposition = pauli_decompose(op, 2);
  // Reconstruction.
  Matrix rebuilt = Matrix::Zero(4, 4);
  const Matrix paulis[4] = {Matrix::Identity(2, 2), sigma_x(), sigma_y(), sigma_z()};
  const std::string labels = "IXYZ";
  for (const auto& [label, coeff] : decomposition) {
    const Matrix term = kron(paulis[labels.find(label[0])],
                             paulis[labels.find(label[1])]);
    rebuilt += coeff * term;
  }
  CHECK((rebuilt - op).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pauli_decompose validates dimensions") {
  auto rng = make_rng(509);
  CHECK_THROWS_AS(pauli_decompose(random_matrix(3, 3, rng), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(pauli_decompose(random_matrix(4, 4, rng), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(pauli_decompose(random_matrix(4, 4, rng), 0),
                  std::invalid_argument);
}

TEST_CASE("worked example: identity point") {
  const ExampleD4 ex = example_d4(1.0, 0.0);
  CHECK((ex.u - Matrix::Identity(4, 4)).norm() == 0.0);
  CHECK(ex.a_decompositions[0].at("XI") == Complex(1, 0));
  CHECK(ex.a_decompositions[1].at("YI") == Complex(1, 0));
  CHECK(ex.a_decompositions[2].at("ZI") == Complex(1, 0));
  CHECK(ex.b_decompositions[2].at("IZ") == Complex(1, 0));
  for (const auto& map : ex.a_decompositions) {
    CHECK(map.size() == 1);
  }
}

TEST_CASE("worked example: maximal point decomposes as (XI + ZX)/sqrt(2)") {
  const ExampleD4 ex = example_d4(kInvSqrt2, kInvSqrt2);
  const PauliMap& x_map = ex.a_decompositions[0];
  REQUIRE(x_map.size() == 2);
  CHECK(std::abs(x_map.at("XI") - Complex(kInvSqrt2, 0)) < 1e-12);
  CHECK(std::abs(x_map.at("ZX") - Complex(kInvSqrt2, 0)) < 1e-12);
}

TEST_CASE("worked example: generic point reproduces the closed-form patterns") {
  const double l1 = 0.6, l2 = 0.8;
  const ExampleD4 ex = example_d4(l1, l2);

  const PauliMap& x_map = ex.a_decompositions[0];
  REQUIRE(x_map.size() == 2);
  CHECK(std::abs(x_map.at("XI") - Complex(l1, 0)) < 1e-12);
  CHECK(std::abs(x_map.at("ZX") - Complex(l2, 0)) < 1e-12);

  const PauliMap& y_map = ex.a_decompositions[1];
  REQUIRE(y_map.size() == 2);
  CHECK(std::abs(y_map.at("YI") - Complex(l1, 0)) < 1e-12);
  CHECK(std::abs(y_map.at("ZY") - Complex(-l2, 0)) < 1e-12);

  const PauliMap& z_map = ex.a_decompositions[2];
  REQUIRE(z_map.size() == 4);
  CHECK(std::abs(z_map.at("ZI") - Complex(l1 * l1, 0)) < 1e-12);
  CHECK(std::abs(z_map.at("IZ") - Complex(-l2 * l2, 0)) < 1e-12);
  CHECK(std::abs(z_map.at("XX") - Complex(-l1 * l2, 0)) < 1e-12);
  CHECK(std::abs(z_map.at("YY") - Complex(l1 * l2, 0)) < 1e-12);

  // B side: same coefficients with every Pauli string reversed.
  for (int j = 0; j < 3; ++j) {
    const PauliMap& a_map = ex.a_decompositions[static_cast<std::size_t>(j)];
    const PauliMap& b_map = ex.b_decompositions[static_cast<std::size_t>(j)];
    REQUIRE(a_map.size() == b_map.size());
    for (const auto& [label, coeff] : a_map) {
      std::string reversed(label.rbegin(), label.rend());
      REQUIRE(b_map.count(reversed) == 1);
      CHECK(std::abs(b_map.at(reversed) - coeff) < 1e-12);
    }
  }
}

TEST_CASE("worked example: direction of the unitary") {
  const double l1 = 0.6, l2 = 0.8;
  const ExampleD4 ex = example_d4(l1, l2);
  // The example matrix maps the physical basis state to the model state:
  // u e_0 = l1 e_0 - l2 e_3 and u^dagger e_0 = l1 e_0 + l2 e_3, i.e. it is
  // the adjoint of the model-to-physical unitary built by tailor_bipartite.
  Vector expected_forward = Vector::Zero(4);
  expected_forward[0] = Complex(l1, 0);
  expected_forward[3] = Complex(-l2, 0);
  CHECK((ex.u * unit_vector(4, 0) - expected_forward).norm() == 0.0);

  Vector expected_adjoint = Vector::Zero(4);
  expected_adjoint[0] = Complex(l1, 0);
  expected_adjoint[3] = Complex(l2, 0);
  CHECK((ex.u.adjoint() * unit_vector(4, 0) - expected_adjoint).norm() == 0.0);

  const TailoredTPS tps = tailor_bipartite(
      unit_vector(4, 0), 2, 2, {Complex(l1, 0), Complex(l2, 0)});
  const Vector via_example = ex.u * unit_vector(4, 0);
  const Vector via_tailor = tps.u.adjoint() * unit_vector(4, 0);
  // Both carry |0> to a state with Schmidt spectrum (l2, l1) sorted; the
  // specific vectors differ only by the completion's sign conventions.
  const SchmidtData a = schmidt_decompose(via_example, 2, 2);
  const SchmidtData b = schmidt_decompose(via_tailor, 2, 2);
  CHECK((a.coefficients - b.coefficients).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("worked example rejects unnormalized parameters") {
  CHECK_THROWS_AS(example_d4(0.9, 0.9), std::invalid_argument);
}
