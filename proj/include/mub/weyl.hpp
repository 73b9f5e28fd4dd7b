#pragma once

#include <cstdint>
#include <vector>

#include "mub/matrix_core.hpp"

namespace mub {

/// Names the operator X^a Z^b in prime dimension p, where
/// X|s> = |s+1 mod p> and Z|s> = alpha_p^s |s>.
struct WeylLabel {
  std::int64_t p;
  std::int64_t a;  // shift power, 0..p-1
  std::int64_t b;  // phase power, 0..p-1

  bool operator==(const WeylLabel&) const = default;
};

/// The p x p matrix of X^a Z^b; entries are roots of unity or zero.
Matrix weyl_matrix(const WeylLabel& label);

/// Projective commutation: true iff a1*b2 - a2*b1 == 0 (mod p).
bool commutes(const WeylLabel& l1, const WeylLabel& l2);

/// Partition of the p^2 - 1 non-identity labels into p + 1 internally
/// commuting classes: powers of Z, then powers of X Z^k for k = 0..p-1.
std::vector<std::vector<WeylLabel>> commuting_classes(std::int64_t p);

/// Joint eigenbasis of the class generated by X Z^k, built in closed form
/// (no numeric eigensolver), for odd prime p.
Basis eigenbasis_xz(std::int64_t p, std::int64_t k);

}  // namespace mub
