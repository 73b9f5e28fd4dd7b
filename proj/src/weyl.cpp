#include "mub/weyl.hpp"

#include <stdexcept>

#include "mub/errors.hpp"
#include "mub/prime_mubs.hpp"

namespace mub {

namespace {

void validate(const WeylLabel& l) {
  if (!is_prime(l.p)) throw std::invalid_argument("Weyl label needs prime p");
  if (l.a < 0 || l.a >= l.p || l.b < 0 || l.b >= l.p)
    throw std::invalid_argument("Weyl powers must lie in 0..p-1");
}

}  // namespace

Matrix weyl_matrix(const WeylLabel& label) {
  validate(label);
  const auto p = label.p;
  Matrix m = Matrix::Zero(p, p);
  // X^a Z^b |s> = alpha_p^{b s} |s + a>
  for (std::int64_t s = 0; s < p; ++s)
    m((s + label.a) % p, s) = root_value(p, label.b * s);
  return m;
}

bool commutes(const WeylLabel& l1, const WeylLabel& l2) {
  validate(l1);
  validate(l2);
  if (l1.p != l2.p)
    throw std::invalid_argument("labels live in different dimensions");
  return (l1.a * l2.b - l2.a * l1.b) % l1.p == 0;
}

std::vector<std::vector<WeylLabel>> commuting_classes(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<std::vector<WeylLabel>> classes;
  classes.reserve(p + 1);
  std::vector<WeylLabel> z_class;
  for (std::int64_t b = 1; b < p; ++b) z_class.push_back({p, 0, b});
  classes.push_back(std::move(z_class));
  for (std::int64_t k = 0; k < p; ++k) {
    std::vector<WeylLabel> cls;  // powers of X Z^k: (a, a k mod p)
    for (std::int64_t a = 1; a < p; ++a) cls.push_back({p, a, (a * k) % p});
    classes.push_back(std::move(cls));
  }
  return classes;
}

Basis eigenbasis_xz(std::int64_t p, std::int64_t k) {
  if (p == 2)
    throw UnsupportedDimension("use the qubit set for p = 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (k < 0 || k >= p) throw std::invalid_argument("k must lie in 0..p-1");
  // column j of the m-th Fourier-Gauss basis is an eigenvector of X Z^{2m},
  // so the class of X Z^k is diagonalized by m = k / 2 in F_p
  PrimeField f(p);
  std::int64_t m = f.mul(k, f.inverse(2));
  return Basis::from_exact("xz^" + std::to_string(k),
                           fourier_gauss_basis(p, m));
}

}  // namespace mub
