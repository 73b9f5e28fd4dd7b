#include <doctest.h>

#include <random>

#include "mub/composite_mubs.hpp"
#include "mub/entanglement.hpp"
#include "mub/prime_mubs.hpp"
#include "mub/product_structure.hpp"
#include "mub/verification.hpp"

using namespace mub;

TEST_CASE("pairwise unbiasedness checks") {
  MubSet qubits = qubit_mubs();
  auto rep = check_unbiased_pair(qubits.bases[0], qubits.bases[1], 1e-10);
  CHECK(rep.unbiased);
  CHECK(rep.max_deviation < 1e-15);

  MubSet d4 = two_qubit_complete_set();
  CHECK(check_unbiased_pair(d4.bases[4], d4.bases[0], 1e-10).unbiased);

  Basis standard = Basis::from_exact("standard", standard_basis(4));
  auto self = check_unbiased_pair(standard, standard, 1e-10);
  CHECK_FALSE(self.unbiased);
  CHECK(self.worst.value == doctest::Approx(1.0));

  CHECK_THROWS_AS(
      check_unbiased_pair(standard, Basis::from_exact("s", standard_basis(5)),
                          1e-10),
      std::invalid_argument);
}

TEST_CASE("set-level verification reports") {
  auto good = check_mub_set(complete_prime_set(7), 1e-9);
  CHECK(good.pass());
  CHECK(good.complete);
  CHECK(good.pairs.size() == 28);

  auto incomplete = check_mub_set(product_mub_set(2, 3), 1e-9);
  CHECK(incomplete.pass());
  CHECK_FALSE(incomplete.complete);

  MubSet duplicated = complete_prime_set(3);
  duplicated.bases[1] = duplicated.bases[0];
  duplicated.bases[1].label = "copy";
  auto bad = check_mub_set(duplicated, 1e-9);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.failure.has_value());
  CHECK(bad.failure->value == doctest::Approx(1.0));
}

TEST_CASE("frame potential equals the Welch value exactly for designs") {
  auto d2 = check_2design(complete_prime_set(2), 1e-9);
  CHECK(d2.frame_potential == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(d2.is_design);

  for (std::int64_t p : {3, 5}) {
    CHECK(check_2design(complete_prime_set(p), 1e-9).is_design);
  }
  CHECK(check_2design(two_qubit_complete_set(), 1e-9).is_design);
  CHECK(check_2design(two_qudit_complete_set(3, 2), 1e-9).is_design);

  // dropping any basis pushes the potential strictly above the bound
  for (std::int64_t p : {2, 3}) {
    MubSet set = complete_prime_set(p);
    for (std::size_t drop = 0; drop < set.bases.size(); ++drop) {
      MubSet smaller = set;
      smaller.bases.erase(smaller.bases.begin() + drop);
      auto rep = check_2design(smaller, 1e-9);
      CHECK_FALSE(rep.is_design);
      CHECK(rep.deviation > 1e-3);
    }
  }
  MubSet d4 = two_qubit_complete_set();
  d4.bases.pop_back();
  CHECK(check_2design(d4, 1e-9).deviation > 1e-3);

  // the d = 6 product triple is far from a design
  auto d6 = check_2design(product_mub_set(2, 3), 1e-9);
  CHECK_FALSE(d6.is_design);
  CHECK(d6.deviation > 1e-3);
}

TEST_CASE("frame potential never falls below the Welch bound") {
  std::mt19937 rng(99);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    int d = 2 + trial % 3;
    MubSet set;
    set.dim = d;
    for (int b = 0; b < 3; ++b) {
      Matrix g(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
      Eigen::HouseholderQR<Matrix> qr(g);
      set.bases.push_back(Basis::from_matrix("r", qr.householderQ()));
    }
    auto rep = check_2design(set, 1e-9);
    CHECK(rep.frame_potential > rep.reference - 1e-9);
  }
}

TEST_CASE("slow-path moment operator agrees with the frame potential") {
  for (int d : {2, 3, 4}) {
    MubSet complete = d == 4 ? two_qubit_complete_set()
                             : complete_prime_set(d);
    CHECK(second_moment_distance(complete) < 1e-9);
    MubSet smaller = complete;
    smaller.bases.pop_back();
    CHECK(second_moment_distance(smaller) > 1e-3);
    CHECK(check_2design(smaller, 1e-9).is_design ==
          (second_moment_distance(smaller) < 1e-9));
  }
  CHECK(second_moment_distance(product_mub_set(2, 3)) > 1e-3);
}

TEST_CASE("design route ties the conservation law to the Lubkin average") {
  // d (d+1) * Lubkin = dA dB (dA + dB), realized by the actual sums
  struct Case {
    MubSet set;
    Bipartition split;
  };
  std::vector<Case> cases;
  cases.push_back({two_qubit_complete_set(), Bipartition(2, 2)});
  cases.push_back({two_qudit_complete_set(3, 2), Bipartition(3, 3)});
  for (const auto& c : cases) {
    double via_design = c.set.dim * (c.set.dim + 1.0) * lubkin_average(c.split);
    CHECK(via_design ==
          doctest::Approx(conservation_reference(c.split)).epsilon(1e-12));
    CHECK(entanglement_sum(c.set, c.split) ==
          doctest::Approx(via_design).epsilon(1e-10));
  }
}

TEST_CASE("fixture regression suite") {
  auto report = run_fixture_suite(MUB_FIXTURE_DIR);
  for (const auto& outcome : report.outcomes) {
    INFO(outcome.file, ": ", outcome.status, " ", outcome.detail);
    CHECK((outcome.status == "match" || outcome.status == "properties-pass"));
  }
  CHECK(report.all_passed);
  CHECK(report.outcomes.size() == 7);

  auto missing = run_fixture_suite("/nonexistent-fixture-dir");
  CHECK_FALSE(missing.all_passed);
  REQUIRE(!missing.outcomes.empty());
  CHECK(missing.outcomes.front().status == "skip");
}
