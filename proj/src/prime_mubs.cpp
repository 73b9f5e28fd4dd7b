#include "mub/prime_mubs.hpp"

#include <stdexcept>

#include "mub/errors.hpp"

namespace mub {

ExactBasis standard_basis(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  return ExactBasis::identity(dim);
}

ExactBasis fourier_gauss_basis(std::int64_t p, std::int64_t m) {
  if (p == 2)
    throw UnsupportedDimension(
        "dimension 2 needs fourth roots of unity; use qubit_basis");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (m < 0 || m >= p) throw std::invalid_argument("m must lie in 0..p-1");
  ExactBasis b(static_cast<int>(p), p, ExactBasis::Scale::kInvSqrtDim);
  for (std::int64_t s = 0; s < p; ++s)
    for (std::int64_t j = 0; j < p; ++j)
      b.set(static_cast<int>(s), static_cast<int>(j), j * s + m * s * s);
  return b;
}

ExactBasis qubit_basis(std::int64_t m) {
  ExactBasis b(2, 4, ExactBasis::Scale::kInvSqrtDim);
  b.set(0, 0, 0);
  b.set(0, 1, 0);
  if (m == 0) {  // sigma_x eigenbasis: (1,1), (1,-1)
    b.set(1, 0, 0);
    b.set(1, 1, 2);
  } else if (m == 1) {  // sigma_y eigenbasis: (1,i), (1,-i)
    b.set(1, 0, 1);
    b.set(1, 1, 3);
  } else {
    throw std::invalid_argument("qubit basis index must be 0 or 1");
  }
  return b;
}

MubSet qubit_mubs() {
  MubSet set;
  set.dim = 2;
  set.provenance.method = "prime";
  set.provenance.p = 2;
  set.bases.push_back(Basis::from_exact("m0", qubit_basis(0)));
  set.bases.push_back(Basis::from_exact("m1", qubit_basis(1)));
  set.bases.push_back(Basis::from_exact("standard", standard_basis(2)));
  return set;
}

ExactDiagonal w_operator(std::int64_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("the cycling operator needs an odd prime");
  ExactDiagonal d;
  d.root_order = p;
  d.exponents.reserve(p);
  for (std::int64_t s = 0; s < p; ++s) d.exponents.push_back((s * s) % p);
  return d;
}

MubSet complete_prime_set(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 2) return qubit_mubs();
  MubSet set;
  set.dim = static_cast<int>(p);
  set.provenance.method = "prime";
  set.provenance.p = p;
  for (std::int64_t m = 0; m < p; ++m)
    set.bases.push_back(
        Basis::from_exact("m" + std::to_string(m), fourier_gauss_basis(p, m)));
  set.bases.push_back(Basis::from_exact("standard", standard_basis(p)));
  return set;
}

ExactBasis local_prime_basis(std::int64_t p, std::int64_t m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m == p) return standard_basis(static_cast<int>(p));
  if (m < 0 || m > p) throw std::invalid_argument("basis index out of range");
  return p == 2 ? qubit_basis(m) : fourier_gauss_basis(p, m);
}

}  // namespace mub
