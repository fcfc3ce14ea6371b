#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "test_helpers.hpp"
#include "tpstailor/algebra.hpp"
#include "tpstailor/spin.hpp"

using namespace tpstailor;
using namespace test_helpers;

namespace {

AlgebraBasis spin_generated(Index d, double tol = kDefaultTol) {
  const SpinRep rep = spin_matrices(d);
  return generated_algebra({rep.s_x, rep.s_y, rep.s_z}, d, tol);
}

// M_k (x) 1_l as a generated algebra.
AlgebraBasis left_factor_algebra(Index k, Index l, double tol = kDefaultTol) {
  const SpinRep rep = spin_matrices(k);
  const Matrix eye = Matrix::Identity(l, l);
  return generated_algebra(
      {kron(rep.s_x, eye), kron(rep.s_y, eye), kron(rep.s_z, eye)}, k * l, tol);
}

}  // namespace

TEST_CASE("spin generators produce the full matrix algebra") {
  for (Index d = 2; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(spin_generated(d).size() == d * d);
  }
}

TEST_CASE("trivial generator sets") {
  for (Index d : {2, 3, 5}) {
    CHECK(generated_algebra({Matrix::Identity(d, d)}, d).size() == 1);
    CHECK(generated_algebra({}, d).size() == 1);
  }
}

TEST_CASE("a non-degenerate diagonal generates all diagonals") {
  const Index d = 5;
  Matrix g = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    g(i, i) = Complex(0.3 + static_cast<double>(i), 0.0);
  }
  const AlgebraBasis algebra = generated_algebra({g}, d);
  CHECK(algebra.size() == d);
  // Every basis element stays diagonal.
  for (const Matrix& b : algebra.basis) {
    Matrix off = b;
    off.diagonal().setZero();
    CHECK(off.norm() < 1e-12);
  }
}

TEST_CASE("generated algebra basis is orthonormal and closed") {
  auto rng = make_rng(301);
  const Index d = 3;
  const AlgebraBasis algebra =
      generated_algebra({random_matrix(d, d, rng), random_matrix(d, d, rng)}, d);
  const Index n = algebra.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex inner = frobenius_inner(algebra.basis[i], algebra.basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      CHECK(std::abs(inner - Complex(expected, 0.0)) < 1e-10);
    }
  }
  // Closure: the residual of any pairwise product outside the span is tiny.
  Matrix stacked(d * d, n);
  for (Index i = 0; i < n; ++i) {
    stacked.col(i) = vec(algebra.basis[i]);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Matrix product = algebra.basis[i] * algebra.basis[j];
      const Vector flattened = vec(product);
      const Vector residual = flattened - stacked * (stacked.adjoint() * flattened);
      CHECK(residual.norm() <
            algebra.closure_tol * std::max(1.0, product.norm()) * 10);
    }
  }
}

TEST_CASE("generated_algebra is monotone in the generator set") {
  auto rng = make_rng(302);
  const Index d = 3;
  std::vector<Matrix> gens{random_matrix(d, d, rng)};
  Index previous = generated_algebra(gens, d).size();
  for (int extra = 0; extra < 3; ++extra) {
    gens.push_back(random_matrix(d, d, rng));
    const Index next = generated_algebra(gens, d).size();
    CHECK(next >= previous);
    previous = next;
  }
}

TEST_CASE("generated dimension matches the word-enumeration oracle") {
  auto rng = make_rng(303);
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 3); // 2..4
    std::vector<Matrix> gens{random_matrix(d, d, rng), random_matrix(d, d, rng)};
    const Index oracle = word_span_rank(gens, d, 6, 1e-10);
    CHECK(generated_algebra(gens, d).size() == oracle);
  }
}

TEST_CASE("generated_algebra validates shapes") {
  auto rng = make_rng(304);
  CHECK_THROWS_AS(generated_algebra({random_matrix(2, 3, rng)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(generated_algebra({random_matrix(3, 3, rng)}, 2),
                  std::invalid_argument);
}

TEST_CASE("commutant of the full algebra is the scalars") {
  for (Index d = 2; d <= 5; ++d) {
    CAPTURE(d);
    const AlgebraBasis full = spin_generated(d);
    const AlgebraBasis prime = commutant(full);
    REQUIRE(prime.size() == 1);
    // The single element is proportional to the identity.
    const Matrix& b = prime.basis[0];
    const Complex scale = b(0, 0);
    CHECK((b - scale * Matrix::Identity(d, d)).norm() < 1e-10);
  }
}

TEST_CASE("commutant of the scalars is everything") {
  for (Index d : {2, 3, 4}) {
    const AlgebraBasis scalars = generated_algebra({}, d);
    CHECK(commutant(scalars).size() == d * d);
  }
}

TEST_CASE("commutant of a left factor spans the right factor") {
  for (auto [k, l] : std::vector<std::pair<Index, Index>>{{2, 2}, {2, 3}, {3, 2}}) {
    CAPTURE(k);
    CAPTURE(l);
    const AlgebraBasis algebra = left_factor_algebra(k, l);
    REQUIRE(algebra.size() == k * k);
    const AlgebraBasis prime = commutant(algebra);
    REQUIRE(prime.size() == l * l);

    // Oracle: direct construction of 1_k (x) E_ij and a rank comparison of
    // the union span.
    std::vector<Matrix> expected_span;
    const Matrix eye_k = Matrix::Identity(k, k);
    for (Index i = 0; i < l; ++i) {
      for (Index j = 0; j < l; ++j) {
        Matrix e = Matrix::Zero(l, l);
        e(i, j) = 1;
        expected_span.push_back(kron(eye_k, e));
      }
    }
    std::vector<Matrix> combined = expected_span;
    combined.insert(combined.end(), prime.basis.begin(), prime.basis.end());
    CHECK(svd_rank_of_span(combined, 1e-10) == l * l);
  }
}

TEST_CASE("double commutant dimensions") {
  // Full matrix algebra.
  for (Index d : {2, 3}) {
    const auto dims = double_commutant_check(spin_generated(d));
    CHECK(dims.dim_algebra == d * d);
    CHECK(dims.dim_commutant == 1);
    CHECK(dims.dim_bicommutant == d * d);
  }
  // Left tensor factor: (k^2, l^2, k^2).
  for (auto [k, l] : std::vector<std::pair<Index, Index>>{{2, 2}, {2, 3}}) {
    const auto dims = double_commutant_check(left_factor_algebra(k, l));
    CHECK(dims.dim_algebra == k * k);
    CHECK(dims.dim_commutant == l * l);
    CHECK(dims.dim_bicommutant == k * k);
  }
  // Scalars: (1, d^2, 1).
  const Index d = 4;
  const auto dims = double_commutant_check(generated_algebra({}, d));
  CHECK(dims.dim_algebra == 1);
  CHECK(dims.dim_commutant == d * d);
  CHECK(dims.dim_bicommutant == 1);
}

TEST_CASE("bicommutant preserves dimension on closed algebras") {
  auto rng = make_rng(305);
  for (int trial = 0; trial < 5; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 3);
    const AlgebraBasis algebra =
        generated_algebra({random_matrix(d, d, rng)}, d);
    const auto dims = double_commutant_check(algebra);
    CHECK(dims.dim_algebra == dims.dim_bicommutant);
  }
}

TEST_CASE("verify_zanardi accepts the canonical product structure") {
  const Index k = 2, l = 2, d = 4;
  const AlgebraBasis left = left_factor_algebra(k, l);
  const SpinRep rep = spin_matrices(l);
  const Matrix eye_k = Matrix::Identity(k, k);
  const AlgebraBasis right = generated_algebra(
      {kron(eye_k, rep.s_x), kron(eye_k, rep.s_y), kron(eye_k, rep.s_z)}, d);
  const ZanardiReport report = verify_zanardi({left, right}, d);
  CHECK(report.is_independent);
  CHECK(report.is_complete);
  CHECK(report.generated_dim == 16);
  CHECK(report.dims_product == 16);
  CHECK(report.independence_max_commutator < 1e-12);
}

TEST_CASE("verify_zanardi flags a non-commuting pair") {
  const Index d = 2;
  const AlgebraBasis full = spin_generated(d);
  const ZanardiReport report = verify_zanardi({full, full}, d);
  CHECK_FALSE(report.is_independent);
  CHECK(report.independence_max_commutator > 0.1);
  // The joint algebra is still everything, but the dimension product is off.
  CHECK(report.generated_dim == 4);
  CHECK(report.dims_product == 16);
  CHECK_FALSE(report.is_complete);
}

TEST_CASE("verify_zanardi validates its inputs") {
  const AlgebraBasis one = spin_generated(2);
  CHECK_THROWS_AS(verify_zanardi({one}, 2), std::invalid_argument);
  const AlgebraBasis other = spin_generated(3);
  CHECK_THROWS_AS(verify_zanardi({one, other}, 2), std::invalid_argument);
}
