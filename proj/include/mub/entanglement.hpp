#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mub/matrix_core.hpp"

namespace mub {

/// How a global index splits into an (a, b) pair. The default embedding is
/// row-major (a = g / dim_b); an explicit permutation supports e.g. cutting
/// out the middle qubit of a three-qubit system.
struct Bipartition {
  int dim_a = 1;
  int dim_b = 1;
  /// position[g] = a * dim_b + b for global index g; empty means identity.
  std::vector<int> position;

  Bipartition(int da, int db);
  Bipartition(int da, int db, std::vector<int> position);

  int dim() const { return dim_a * dim_b; }

  /// Bipartition of a tensor-factor system that groups factor `which` as
  /// side A and the remaining factors (in order) as side B.
  static Bipartition factor_cut(const std::vector<int>& dims, int which);
};

/// Tr(rho_A^2) of a pure state, from the coefficient matrix C as
/// Tr((C C^dagger)^2). Equals the B-side purity by Schmidt symmetry.
/// The state must be normalized within 1e-8.
double reduced_purity(const Vector& state, const Bipartition& split);

/// Sum of Tr(rho_A^2) over all states of all bases. For a complete set this
/// is dim_a * dim_b * (dim_a + dim_b) regardless of the choice of set.
double entanglement_sum(const MubSet& set, const Bipartition& split);

/// The conserved total dim_a * dim_b * (dim_a + dim_b).
double conservation_reference(const Bipartition& split);

enum class StateClass { kProduct, kPartial, kMaximal };
enum class BasisClass { kProduct, kMaximal, kMixed };

std::string to_string(StateClass c);
std::string to_string(BasisClass c);

struct BasisProfile {
  std::string label;
  std::vector<double> purities;
  std::vector<StateClass> state_classes;
  BasisClass verdict = BasisClass::kMixed;
  double purity_sum = 0.0;
};

/// Per-state purities and classification of a whole set under one cut.
struct EntanglementProfile {
  Bipartition split{1, 1};
  std::vector<BasisProfile> bases;
  double total = 0.0;

  int count(BasisClass c) const;
  /// When the set is complete and has min(dA,dB)+1 product bases, are all
  /// remaining states maximally entangled?
  bool product_rest_maximal() const;
};

/// Classification threshold: product iff purity >= 1 - eps, maximal iff
/// purity <= 1/min(dim_a, dim_b) + eps.
EntanglementProfile classify_set(const MubSet& set, const Bipartition& split,
                                 double eps = 1e-6);

struct HaarEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

/// Monte Carlo mean of reduced_purity over Haar-random pure states
/// (normalized complex Gaussian amplitudes). Deterministic per seed.
HaarEstimate haar_average_purity(const Bipartition& split, std::int64_t samples,
                                 std::uint64_t seed);

/// (dim_a + dim_b) / (dim + 1), the Haar average of the reduced purity.
double lubkin_average(const Bipartition& split);

}  // namespace mub
