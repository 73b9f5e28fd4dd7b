#include "mub/composite_mubs.hpp"

#include <stdexcept>
#include <string>

#include "mub/errors.hpp"
#include "mub/prime_mubs.hpp"

namespace mub {

ExactDiagonal control_phase(std::int64_t p, std::int64_t power) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  ExactDiagonal d;
  d.root_order = p;
  d.exponents.reserve(p * p);
  for (std::int64_t s = 0; s < p; ++s)
    for (std::int64_t t = 0; t < p; ++t) {
      std::int64_t e = (s * t % p) * (power % p) % p;
      d.exponents.push_back(e < 0 ? e + p : e);
    }
  return d;
}

ExactDiagonal three_qubit_gate(int k, int l, int m) {
  if ((k | l | m) < 0 || k > 1 || l > 1 || m > 1)
    throw std::invalid_argument("gate indices must be bits");
  ExactDiagonal d;
  d.root_order = 2;
  d.exponents.reserve(8);
  // expanding the four-term Z-string sum: the entry at |abc> is +1 when
  // ka+lb+mc is even and (-1)^{(1-k)a+(1-l)b+(1-m)c} when it is odd
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) {
        int u = (k * a + l * b + m * c) % 2;
        int e = u == 0 ? 0 : ((1 - k) * a + (1 - l) * b + (1 - m) * c) % 2;
        d.exponents.push_back(e);
      }
  return d;
}

namespace {

// Shared builder for d = p^2: standard basis plus P_p^{theta nu} applied to
// the shifted product bases {|a_mu b_{mu+nu}>}, nu-major order.
MubSet entangled_product_set(std::int64_t p, std::int64_t theta,
                             const std::string& method) {
  MubSet set;
  set.dim = static_cast<int>(p * p);
  set.provenance.method = method;
  set.provenance.p = p;
  set.provenance.theta = theta;
  for (std::int64_t nu = 0; nu < p; ++nu) {
    ExactDiagonal gate = control_phase(p, theta * nu % p);
    for (std::int64_t mu = 0; mu < p; ++mu) {
      ExactBasis b = tensor(local_prime_basis(p, mu),
                            local_prime_basis(p, (mu + nu) % p));
      if (nu != 0) b = apply_diagonal(gate, b);
      set.bases.push_back(Basis::from_exact(
          "mu" + std::to_string(mu) + "nu" + std::to_string(nu), std::move(b)));
    }
  }
  set.bases.push_back(
      Basis::from_exact("standard", standard_basis(set.dim)));
  return set;
}

}  // namespace

MubSet two_qubit_complete_set() {
  return entangled_product_set(2, 1, "two-qubit");
}

MubSet two_qudit_complete_set(std::int64_t p,
                              std::optional<std::int64_t> theta) {
  if (p == 2)
    throw UnsupportedDimension(
        "p = 2 does not use theta; call two_qubit_complete_set");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  std::int64_t t = theta ? *theta : find_theta(p);
  if (is_quadratic_residue((1 + t * t) % p, p))
    throw InvalidTheta("1 + theta^2 = " + std::to_string(1 + t * t) +
                       " is a quadratic residue mod " + std::to_string(p));
  return entangled_product_set(p, t, "prime-squared");
}

MubSet three_qubit_set() {
  MubSet set;
  set.dim = 8;
  set.provenance.method = "three-qubit";
  set.bases.push_back(Basis::from_exact("standard", standard_basis(8)));
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l)
      for (int m = 0; m <= 1; ++m) {
        ExactBasis b = tensor(tensor(qubit_basis(k), qubit_basis(l)),
                              qubit_basis(m));
        // the gate indices are the basis indices rotated one step left;
        // pairing G_klm with |a_k b_l c_m> itself breaks unbiasedness
        b = apply_diagonal(three_qubit_gate(l, m, k), b);
        set.bases.push_back(Basis::from_exact(
            "klm=" + std::to_string(k) + std::to_string(l) + std::to_string(m),
            std::move(b)));
      }
  return set;
}

Basis swap_partner_basis(const Basis& b, int dim_a, int dim_b) {
  if (dim_a != dim_b)
    throw std::invalid_argument("swap partner needs equal subsystems");
  return swap_subsystems(b, dim_a, dim_b);
}

}  // namespace mub
