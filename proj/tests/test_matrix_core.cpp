#include <doctest.h>

#include <random>

#include "mub/matrix_core.hpp"
#include "mub/prime_mubs.hpp"

using namespace mub;

namespace {

Vector random_state(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

Matrix random_unitary(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("tensor of standard bases is the bigger standard basis") {
  ExactBasis t = tensor(standard_basis(2), standard_basis(3));
  CHECK(t.same_entries(standard_basis(6)));
  CHECK((t.to_matrix() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor column convention: left factor is the slow index") {
  Basis a = Basis::from_exact("m0", qubit_basis(0));
  Basis b = Basis::from_exact("m1", qubit_basis(1));
  Basis t = tensor(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vector expected = tensor(Matrix(a.matrix.col(i)), Matrix(b.matrix.col(j)));
      CHECK((t.matrix.col(i * 2 + j) - expected).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("tensor of unitaries is unitary") {
  for (unsigned seed : {1u, 2u, 3u}) {
    Matrix a = random_unitary(2, seed);
    Matrix b = random_unitary(3, seed + 100);
    CHECK(is_unitary(tensor(a, b), 1e-12));
  }
}

TEST_CASE("overlap_sq basics") {
  Vector v = random_state(5, 11);
  CHECK(overlap_sq(v, v) == doctest::Approx(1.0).epsilon(1e-12));
  Vector e0 = Vector::Zero(3), e1 = Vector::Zero(3);
  e0(0) = 1;
  e1(1) = 1;
  CHECK(overlap_sq(e0, e1) == 0.0);
  Basis fourier = Basis::from_exact("m0", fourier_gauss_basis(3, 0));
  CHECK(overlap_sq(e0, fourier.column(1)) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK_THROWS_AS(overlap_sq(e0, random_state(4, 1)), std::invalid_argument);
}

TEST_CASE("apply_unitary validates and left-multiplies") {
  Basis b = Basis::from_exact("m1", fourier_gauss_basis(5, 1));
  Basis same = apply_unitary(Matrix::Identity(5, 5), b);
  CHECK((same.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);

  Matrix not_unitary = Matrix::Identity(5, 5) * 1.5;
  CHECK_THROWS_AS(apply_unitary(not_unitary, b), std::invalid_argument);
}

TEST_CASE("the cycling operator advances the basis index") {
  for (std::int64_t p : {3, 5, 7}) {
    ExactDiagonal w = w_operator(p);
    for (std::int64_t m = 0; m < p; ++m) {
      ExactBasis moved = apply_diagonal(w, fourier_gauss_basis(p, m));
      CHECK(moved.same_entries(fourier_gauss_basis(p, (m + 1) % p)));
    }
    // and the float route agrees with the exact route
    Basis b = Basis::from_exact("m0", fourier_gauss_basis(p, 0));
    Basis via_matrix = apply_unitary(w.to_matrix(), b);
    CHECK((via_matrix.matrix - fourier_gauss_basis(p, 1).to_matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
}

TEST_CASE("swap_subsystems is the involution it should be") {
  Vector x = random_state(2, 5), y = random_state(3, 6);
  Vector xy = tensor(Matrix(x), Matrix(y));
  Vector yx = tensor(Matrix(y), Matrix(x));
  CHECK((swap_subsystems(xy, 2, 3) - yx).cwiseAbs().maxCoeff() < 1e-15);

  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK((swap_subsystems(bell, 2, 2) - bell).cwiseAbs().maxCoeff() == 0.0);

  for (unsigned seed : {21u, 22u}) {
    Vector s = random_state(12, seed);
    Vector twice = swap_subsystems(swap_subsystems(s, 3, 4), 4, 3);
    CHECK((twice - s).cwiseAbs().maxCoeff() < 1e-15);
  }
  CHECK_THROWS_AS(swap_subsystems(random_state(5, 1), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("exact round-trip preserves every exponent") {
  for (std::int64_t p : {3, 5}) {
    for (std::int64_t m = 0; m < p; ++m) {
      ExactBasis e = fourier_gauss_basis(p, m);
      auto back = ExactBasis::from_matrix(e.to_matrix(), p,
                                          ExactBasis::Scale::kInvSqrtDim);
      REQUIRE(back.has_value());
      CHECK(back->same_entries(e));
    }
  }
  ExactBasis q = qubit_basis(1);
  auto back = ExactBasis::from_matrix(q.to_matrix(), 4,
                                      ExactBasis::Scale::kInvSqrtDim);
  REQUIRE(back.has_value());
  CHECK(back->same_entries(q));

  // off-grid matrices refuse to be exactified
  CHECK_FALSE(ExactBasis::from_matrix(random_unitary(3, 9), 3,
                                      ExactBasis::Scale::kInvSqrtDim)
                  .has_value());
}

TEST_CASE("same_entries is insensitive to the stored root order") {
  ExactBasis e = fourier_gauss_basis(3, 1);
  CHECK(e.same_entries(e.rescaled(6)));
  CHECK(e.rescaled(12).same_entries(e.rescaled(6)));
  CHECK_FALSE(e.same_entries(fourier_gauss_basis(3, 2)));
  CHECK(e.rescaled(12).reduced().root_order() == 3);
}
