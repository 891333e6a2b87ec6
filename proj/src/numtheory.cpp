#include "lucas/numtheory.hpp"

#include <string>

#include "lucas/error.hpp"

namespace lucas {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value > kMaxValue) {
    throw Error(Errc::NotPrime, "modulus " + std::to_string(value) + " exceeds 2^32 - 1");
  }
  if (!is_prime(value)) {
    throw Error(Errc::NotPrime, std::to_string(value) + " is not prime");
  }
}

Residue Residue::from_signed(std::int64_t value, Prime modulus) {
  const auto m = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Residue(static_cast<std::uint64_t>(r), modulus);
}

Residue Residue::from_big(const BigInt& value, Prime modulus) {
  BigInt r = value % modulus.value();
  if (r < 0) r += modulus.value();
  return Residue(static_cast<std::uint64_t>(r), modulus);
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::ModulusMismatch, "residues have different moduli");
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(add_mod(a.value(), b.value(), a.modulus().value()), a.modulus());
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(sub_mod(a.value(), b.value(), a.modulus().value()), a.modulus());
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value(), b.value(), a.modulus().value()), a.modulus());
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

Residue mod_pow(const Residue& base, std::uint64_t exp) {
  return Residue(pow_mod(base.value(), exp, base.modulus().value()), base.modulus());
}

Residue mod_pow(const Residue& base, const BigInt& exp) {
  if (exp < 0) throw Error(Errc::ExponentOutOfRange, "negative exponent");
  const std::uint64_t m = base.modulus().value();
  std::uint64_t result = 1 % m;
  std::uint64_t b = base.value();
  const auto bits = exp == 0 ? 0U : boost::multiprecision::msb(exp) + 1;
  for (unsigned i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(exp, i)) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
  }
  return Residue(result, base.modulus());
}

std::uint64_t euler_phi(Prime p) { return p.value() - 1; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

namespace {

bool has_full_order(std::uint64_t alpha, std::uint64_t p, const std::vector<std::uint64_t>& factors) {
  for (auto q : factors) {
    if (pow_mod(alpha, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_primitive_root(const Residue& alpha) {
  if (alpha.value() == 0) throw Error(Errc::NotInvertible, "0 has no multiplicative order");
  const std::uint64_t p = alpha.modulus().value();
  return has_full_order(alpha.value(), p, prime_factors(p - 1));
}

std::vector<Residue> primitive_roots(Prime p) {
  std::vector<Residue> roots;
  if (p.value() == 2) {
    roots.emplace_back(1, p);
    return roots;
  }
  const auto factors = prime_factors(p.value() - 1);
  for (std::uint64_t g = 2; g < p.value(); ++g) {
    if (has_full_order(g, p.value(), factors)) roots.emplace_back(g, p);
  }
  return roots;
}

Residue smallest_primitive_root(Prime p) {
  if (p.value() == 2) return Residue(1, p);
  const auto factors = prime_factors(p.value() - 1);
  for (std::uint64_t g = 2;; ++g) {
    if (has_full_order(g, p.value(), factors)) return Residue(g, p);
  }
}

Residue scalar_inverse(const Residue& a) {
  if (a.value() == 0) throw Error(Errc::NotInvertible, "0 is not invertible");
  return mod_pow(a, a.modulus().value() - 2);
}

}  // namespace lucas
