#pragma once

#include <complex>
#include <cstdint>

namespace mub {

using Complex = std::complex<double>;

/// Deterministic primality test by trial division. Intended range is
/// desk-scale (p well below 10^6), where this is instant.
bool is_prime(std::int64_t n);

/// exp(i*2*pi*k/L) for integer k, represented losslessly as (order, exponent)
/// with the exponent always reduced into [0, order).
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;

  /// Reduces `exponent` mod `order`. Throws std::invalid_argument if order < 1.
  static RootOfUnity make(std::int64_t order, std::int64_t exponent);

  /// Product of two roots of the same order (exponents add mod order).
  RootOfUnity times(const RootOfUnity& other) const;

  /// Re-expresses this root relative to a multiple of its order.
  RootOfUnity rescaled(std::int64_t new_order) const;

  Complex value() const;

  bool operator==(const RootOfUnity&) const = default;
};

/// exp(i*2*pi*exponent/order) as a complex double.
Complex root_value(std::int64_t order, std::int64_t exponent);

/// Arithmetic in F_p. The modulus is checked for primality on construction.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  std::int64_t reduce(std::int64_t x) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  /// Multiplicative inverse; throws std::invalid_argument for 0.
  std::int64_t inverse(std::int64_t a) const;

 private:
  std::int64_t p_;
};

/// True iff x is a square mod p (0 counts as 0^2). p must be prime.
bool is_quadratic_residue(std::int64_t x, std::int64_t p);

/// Smallest theta >= 1 with 1 + theta^2 a quadratic non-residue mod p.
/// Such theta exists for every odd prime; p = 2 is rejected with
/// UnsupportedDimension since the two-qubit construction does not use theta.
std::int64_t find_theta(std::int64_t p);

/// Among the first n odd primes, how many have 2 = 1 + 1^2 as a quadratic
/// residue, i.e. how often the theta = 1 guess fails.
std::int64_t count_theta1_failures(std::int64_t n);

}  // namespace mub
