#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mub/matrix_core.hpp"

namespace mub {

/// 0/1 vector of length d^2 with exactly d ones, stored as the sorted list
/// of supported slots. Slot s corresponds to cell (s / d, s % d).
struct IncidentVector {
  int dim = 0;
  std::vector<int> support;  // ascending, size == dim
};

/// d incident vectors with pairwise disjoint supports covering all d^2 slots.
struct IncidentFamily {
  int dim = 0;
  std::vector<IncidentVector> members;
};

/// |support(a) intersect support(b)|.
int support_intersection(const IncidentVector& a, const IncidentVector& b);

/// True iff members partition the d^2 slots (disjoint, weight d each).
bool family_valid(const IncidentFamily& f);

/// True iff every cross pair of members meets in exactly one slot.
bool families_compatible(const IncidentFamily& f, const IncidentFamily& g);

/// The row family (vector i supported on row i) and the column family.
std::array<IncidentFamily, 2> natural_families(int d);

/// For prime d, the d - 1 families from the Latin squares L_k(i,j) = i + k*j
/// mod d (k = 1..d-1): family k's vector v is supported on cells with
/// i + k*j == v. Together with natural_families these are d + 1 pairwise
/// compatible families. Non-prime d is rejected (UnsupportedDimension).
std::vector<IncidentFamily> mols_families(std::int64_t d);

/// Places the phase entries onto the incident vector's support in ascending
/// slot order and normalizes: slot support[t] carries phases[t] / sqrt(d).
/// Phase entries must have modulus 1 within 1e-12.
Vector lift(const Vector& phases, const IncidentVector& v);

/// One basis per incident-vector family (d + 1 bases in dimension d^2 for
/// prime d): states lift(h_j, V_i) over all phase vectors h_j and members
/// V_i. Default phases are the rows of the d-dimensional Fourier matrix;
/// custom phases must be pairwise orthogonal with unit-modulus entries.
/// With Fourier phases the two natural-family bases are product and every
/// Latin-square basis is maximally entangled.
MubSet wocjan_beth_mubs(std::int64_t d,
                        const std::optional<std::vector<Vector>>& phases = std::nullopt);

}  // namespace mub
