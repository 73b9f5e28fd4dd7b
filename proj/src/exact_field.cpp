#include "mub/exact_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mub/errors.hpp"

namespace mub {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// operands are already reduced mod m; desk-scale moduli keep a*b in range
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return a * b % m;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

RootOfUnity RootOfUnity::make(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw std::invalid_argument("root order must be >= 1");
  return RootOfUnity{order, floor_mod(exponent, order)};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& other) const {
  if (order != other.order)
    throw std::invalid_argument("cannot multiply roots of different order");
  return make(order, exponent + other.exponent);
}

RootOfUnity RootOfUnity::rescaled(std::int64_t new_order) const {
  if (new_order % order != 0)
    throw std::invalid_argument("new order must be a multiple of the old");
  return RootOfUnity{new_order, exponent * (new_order / order)};
}

Complex RootOfUnity::value() const { return root_value(order, exponent); }

Complex root_value(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw std::invalid_argument("root order must be >= 1");
  std::int64_t k = floor_mod(exponent, order);
  // quarter turns come out exact
  if (4 * k == 0) return {1.0, 0.0};
  if (4 * k == order) return {0.0, 1.0};
  if (2 * k == order) return {-1.0, 0.0};
  if (4 * k == 3 * order) return {0.0, -1.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                 static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
}

std::int64_t PrimeField::reduce(std::int64_t x) const { return floor_mod(x, p_); }

std::int64_t PrimeField::add(std::int64_t a, std::int64_t b) const {
  return floor_mod(reduce(a) + reduce(b), p_);
}

std::int64_t PrimeField::sub(std::int64_t a, std::int64_t b) const {
  return floor_mod(reduce(a) - reduce(b), p_);
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const {
  return mul_mod(reduce(a), reduce(b), p_);
}

std::int64_t PrimeField::neg(std::int64_t a) const {
  return floor_mod(-reduce(a), p_);
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const {
  if (e < 0) return pow(inverse(a), -e);
  return pow_mod(a, e, p_);
}

std::int64_t PrimeField::inverse(std::int64_t a) const {
  std::int64_t x = reduce(a);
  if (x == 0) throw std::invalid_argument("0 has no inverse");
  return pow_mod(x, p_ - 2, p_);  // Fermat
}

bool is_quadratic_residue(std::int64_t x, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  x = floor_mod(x, p);
  if (x == 0) return true;  // 0 = 0^2
  if (p == 2) return true;
  return pow_mod(x, (p - 1) / 2, p) == 1;  // Euler criterion
}

std::int64_t find_theta(std::int64_t p) {
  if (p == 2)
    throw UnsupportedDimension("theta is not used for p = 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  for (std::int64_t theta = 1;; ++theta) {
    if (!is_quadratic_residue(floor_mod(1 + theta * theta, p), p)) return theta;
    // the counting argument guarantees termination: only (p+1)/2 field
    // elements are squares, so some 1 + theta^2 lands outside them
  }
}

std::int64_t count_theta1_failures(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::int64_t failures = 0;
  std::int64_t seen = 0;
  for (std::int64_t c = 3; seen < n; c += 2) {
    if (!is_prime(c)) continue;
    ++seen;
    if (is_quadratic_residue(2, c)) ++failures;
  }
  return failures;
}

}  // namespace mub
