#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mub/matrix_core.hpp"

namespace mub {

inline constexpr double kDefaultCheckTol = 1e-9;

struct PairWitness {
  std::size_t basis_1 = 0, basis_2 = 0;
  int state_1 = 0, state_2 = 0;
  double value = 0.0;  // the offending |overlap|^2
};

struct PairReport {
  bool unbiased = false;
  double max_deviation = 0.0;  // max ||overlap|^2 - 1/d|
  PairWitness worst;
};

/// Max over the d^2 cross overlaps of ||<v|w>|^2 - 1/d| against tol.
PairReport check_unbiased_pair(const Basis& b1, const Basis& b2,
                               double tol = kDefaultCheckTol);

struct VerificationReport {
  bool orthonormal = false;
  bool unbiased = false;
  bool complete = false;
  double max_orthonormality_residual = 0.0;
  double max_unbiased_deviation = 0.0;
  std::vector<PairReport> pairs;  // row-major over i < j
  std::optional<PairWitness> failure;

  bool pass() const { return orthonormal && unbiased; }
};

/// Orthonormality of every basis plus pairwise unbiasedness of every pair;
/// `complete` flags whether the set has dim + 1 members.
VerificationReport check_mub_set(const MubSet& set,
                                 double tol = kDefaultCheckTol);

struct DesignReport {
  double frame_potential = 0.0;
  double reference = 0.0;  // N^2 * 2 / (d (d+1)), the Welch-bound value
  double deviation = 0.0;
  bool is_design = false;
};

/// Projective 2-design test via the frame potential
/// sum over ordered state pairs of |<psi_i|psi_j>|^4; equality with the
/// Welch bound characterizes 2-designs. Compensated summation keeps the
/// comparison meaningful at tol = 1e-9 even for thousands of states.
DesignReport check_2design(const MubSet& set, double tol = kDefaultCheckTol);

/// Slow-path cross-check of the same property: Frobenius distance between
/// the empirical second-moment operator (1/N) sum (|psi><psi|)^(x2) and
/// 2/(d(d+1)) times the symmetric-subspace projector. O(N d^4); use d <= 4.
double second_moment_distance(const MubSet& set);

struct FixtureOutcome {
  std::string file;
  std::string status;  // "match", "properties-pass", "fail", "skip"
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureOutcome> outcomes;
  bool all_passed = true;
};

/// Regression suite over the shipped reference sets: reconstructs each set
/// and compares entry-exactly (or by property, where the manifest says the
/// printed source is unreliable). Missing files yield explicit skips.
FixtureReport run_fixture_suite(const std::filesystem::path& fixture_dir);

}  // namespace mub
