#include <doctest.h>

#include <set>

#include "mub/errors.hpp"
#include "mub/prime_mubs.hpp"
#include "mub/verification.hpp"
#include "mub/weyl.hpp"

using namespace mub;

TEST_CASE("qubit Weyl matrices") {
  Matrix x = weyl_matrix({2, 1, 0});
  CHECK(x(0, 1) == Complex(1, 0));
  CHECK(x(1, 0) == Complex(1, 0));
  CHECK(x(0, 0) == Complex(0, 0));
  Matrix z = weyl_matrix({2, 0, 1});
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
}

TEST_CASE("trace orthogonality of the operator basis") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        Matrix left = weyl_matrix({p, a, b});
        for (std::int64_t c = 0; c < p; ++c)
          for (std::int64_t d = 0; d < p; ++d) {
            Complex tr = (left.adjoint() * weyl_matrix({p, c, d})).trace();
            double expected = (a == c && b == d) ? double(p) : 0.0;
            CHECK(std::abs(tr - Complex(expected, 0)) < 1e-9);
          }
      }
  }
}

TEST_CASE("label commutation agrees with the matrix commutator") {
  CHECK(commutes({5, 1, 0}, {5, 2, 0}));
  CHECK_FALSE(commutes({3, 1, 0}, {3, 0, 1}));
  CHECK(commutes({5, 1, 2}, {5, 2, 4}));
  CHECK_THROWS_AS(commutes({3, 1, 0}, {5, 1, 0}), std::invalid_argument);

  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t a1 = 0; a1 < p; ++a1)
      for (std::int64_t b1 = 0; b1 < p; ++b1)
        for (std::int64_t a2 = 0; a2 < p; ++a2)
          for (std::int64_t b2 = 0; b2 < p; ++b2) {
            Matrix m1 = weyl_matrix({p, a1, b1});
            Matrix m2 = weyl_matrix({p, a2, b2});
            bool brute = (m1 * m2 - m2 * m1).cwiseAbs().maxCoeff() < 1e-10;
            CHECK(commutes({p, a1, b1}, {p, a2, b2}) == brute);
          }
  }
}

TEST_CASE("commuting classes partition the non-identity labels") {
  auto two = commuting_classes(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == std::vector<WeylLabel>{{2, 0, 1}});  // Z
  CHECK(two[1] == std::vector<WeylLabel>{{2, 1, 0}});  // X
  CHECK(two[2] == std::vector<WeylLabel>{{2, 1, 1}});  // XZ

  auto three = commuting_classes(3);
  REQUIRE(three.size() == 4);
  for (const auto& cls : three) CHECK(cls.size() == 2);

  for (std::int64_t p : {2, 3, 5, 7}) {
    auto classes = commuting_classes(p);
    REQUIRE(static_cast<std::int64_t>(classes.size()) == p + 1);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& cls : classes) {
      CHECK(static_cast<std::int64_t>(cls.size()) == p - 1);
      for (const auto& l1 : cls) {
        CHECK(!(l1.a == 0 && l1.b == 0));
        CHECK(seen.insert({l1.a, l1.b}).second);
        for (const auto& l2 : cls) CHECK(commutes(l1, l2));
      }
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == p * p - 1);
  }

  // the class of X at p = 5 is exactly the powers of X
  auto five = commuting_classes(5);
  CHECK(five[1] == std::vector<WeylLabel>{{5, 1, 0}, {5, 2, 0}, {5, 3, 0}, {5, 4, 0}});
}

TEST_CASE("closed-form eigenbases really are eigenbases") {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t k = 0; k < p; ++k) {
      Basis basis = eigenbasis_xz(p, k);
      Matrix op = weyl_matrix({p, 1, k});
      for (int j = 0; j < basis.dim(); ++j) {
        Vector image = op * basis.column(j);
        CHECK(overlap_sq(basis.column(j), image) ==
              doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(eigenbasis_xz(2, 0), UnsupportedDimension);
}

TEST_CASE("eigenbasis_xz maps onto the Fourier-Gauss family") {
  Basis f0 = eigenbasis_xz(3, 0);
  CHECK((f0.matrix - fourier_gauss_basis(3, 0).to_matrix()).cwiseAbs().maxCoeff() <
        1e-14);
  // k = 2 corresponds to m = 1 (2m = k in F_3), up to per-column phase
  Basis k2 = eigenbasis_xz(3, 2);
  Matrix f1 = fourier_gauss_basis(3, 1).to_matrix();
  for (int j = 0; j < 3; ++j)
    CHECK(overlap_sq(k2.column(j), f1.col(j)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("class eigenbases are pairwise unbiased") {
  for (std::int64_t p : {3, 5, 7}) {
    std::vector<Basis> bases;
    bases.push_back(Basis::from_exact("standard", standard_basis(p)));
    for (std::int64_t k = 0; k < p; ++k) bases.push_back(eigenbasis_xz(p, k));
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = i + 1; j < bases.size(); ++j)
        CHECK(check_unbiased_pair(bases[i], bases[j], 1e-10).unbiased);
  }
}
