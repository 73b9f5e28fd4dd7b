#pragma once

#include <cstdint>

#include "mub/matrix_core.hpp"

namespace mub {

/// Identity matrix as a basis (the computational basis).
ExactBasis standard_basis(int dim);

/// Basis m of the complete prime-dimension set: column j carries entries
/// alpha_p^{j s + m s^2} / sqrt(p) at row s. Odd p only; dimension 2 needs
/// fourth roots of unity and is covered by qubit_mubs().
ExactBasis fourier_gauss_basis(std::int64_t p, std::int64_t m);

/// The qubit basis with index m: m = 0 the sigma_x eigenbasis,
/// m = 1 the sigma_y eigenbasis (entries over fourth roots of unity).
ExactBasis qubit_basis(std::int64_t m);

/// The three qubit bases, labels m0, m1, standard.
MubSet qubit_mubs();

/// The cycling operator diag[alpha_p^{s^2}]: maps basis m to basis m+1 mod p
/// and leaves the standard basis fixed.
ExactDiagonal w_operator(std::int64_t p);

/// Complete set of p + 1 bases in prime dimension p, ordered m = 0..p-1
/// followed by the standard basis (the m = p convention).
MubSet complete_prime_set(std::int64_t p);

/// Local basis with index m in 0..p: Fourier-Gauss (or qubit) for m < p,
/// standard for m = p.
ExactBasis local_prime_basis(std::int64_t p, std::int64_t m);

}  // namespace mub
