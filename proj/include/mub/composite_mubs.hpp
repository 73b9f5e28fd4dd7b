#pragma once

#include <cstdint>
#include <optional>

#include "mub/matrix_core.hpp"

namespace mub {

/// Power of the control-phase gate on two p-level systems: diagonal with
/// entry alpha_p^{s t power} at |s,t>. For p = 2 and power = 1 this is
/// diag(1, 1, 1, -1), the controlled-Z.
ExactDiagonal control_phase(std::int64_t p, std::int64_t power);

/// Diagonal three-qubit entangling gate
///   (1/2) (I(x)I(x)I + Z^k(x)Z^l(x)Z^m + Z^{1-k}(x)Z^{1-l}(x)Z^{1-m} - Z(x)Z(x)Z).
/// Invariant under complementing all three indices; (0,0,0) and (1,1,1)
/// give the identity.
ExactDiagonal three_qubit_gate(int k, int l, int m);

/// Complete set of 5 bases in dimension 4, built from the two-qubit product
/// bases and controlled-Z. Order: mu0nu0 {a_0 b_0}, mu1nu1... see
/// two_qudit_complete_set for the (mu, nu) labeling; standard basis last.
MubSet two_qubit_complete_set();

/// Complete set of p^2 + 1 bases in dimension p^2 for odd prime p:
/// bases P_p^{theta nu} {|a_mu b_{mu+nu}>} for nu-major (mu, nu) in
/// 0..p-1, standard basis last. theta defaults to find_theta(p); an
/// explicit theta must satisfy the non-residue condition (InvalidTheta
/// otherwise). Labels are "mu{mu}nu{nu}" and "standard".
MubSet two_qudit_complete_set(std::int64_t p,
                              std::optional<std::int64_t> theta = std::nullopt);

/// Complete set of 9 bases in dimension 8: the standard basis plus, for each
/// (k,l,m) in {0,1}^3, the gate three_qubit_gate(l, m, k) applied to the
/// product basis {|a_k b_l c_m>}. The rotated gate indices are what make the
/// set pairwise unbiased; the aligned pairing fails (see tests). Exactly the
/// standard, klm=000 and klm=111 members are product across every
/// single-qubit cut.
MubSet three_qubit_set();

/// swap_subsystems applied to every column; requires dim_a == dim_b.
Basis swap_partner_basis(const Basis& b, int dim_a, int dim_b);

}  // namespace mub
