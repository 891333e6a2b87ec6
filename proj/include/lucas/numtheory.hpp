#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "lucas/bigint.hpp"

namespace lucas {

/// A prime modulus, verified by trial division at construction.
/// Values must lie below 2^32 so that residue products fit in 64 bits.
class Prime {
 public:
  static constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 32) - 1;

  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

/// An element of Z/pZ; always stored reduced into [0, p).
class Residue {
 public:
  Residue(std::uint64_t value, Prime modulus) : value_(value % modulus.value()), modulus_(modulus) {}
  /// Signed values are reduced with floor semantics, so -1 maps to p - 1.
  static Residue from_signed(std::int64_t value, Prime modulus);
  static Residue from_big(const BigInt& value, Prime modulus);

  std::uint64_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  Prime modulus_;
};

Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);

// Raw helpers on values already reduced mod m (m < 2^32).
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Square-and-multiply exponentiation.
Residue mod_pow(const Residue& base, std::uint64_t exp);
/// Same, for exponents beyond 64 bits. Negative exponents are rejected.
Residue mod_pow(const Residue& base, const BigInt& exp);

/// phi(p) = p - 1.
std::uint64_t euler_phi(Prime p);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff alpha has multiplicative order p - 1. Throws NotInvertible for alpha = 0.
bool is_primitive_root(const Residue& alpha);

/// All primitive roots mod p, ascending.
std::vector<Residue> primitive_roots(Prime p);

Residue smallest_primitive_root(Prime p);

/// Inverse via Fermat's little theorem. Throws NotInvertible for a = 0.
Residue scalar_inverse(const Residue& a);

}  // namespace lucas
