#pragma once

#include <cstdint>
#include <string>

#include "lucas/bigint.hpp"
#include "lucas/numtheory.hpp"

namespace lucas {

/// Size of GL_lambda(F_p), the nominal keyspace of a lambda x lambda key.
struct KeyspaceReport {
  int lambda;
  Prime p;
  BigInt gl_order;
  /// floor(log10(gl_order))
  int decimal_magnitude;

  /// Leading `digits` significant digits as d.ddd...
  std::string significand(int digits = 4) const;
};

/// (p^l - p^{l-1})(p^l - p^{l-2}) ... (p^l - 1), exact.
BigInt gl_order(int lambda, Prime p);

KeyspaceReport keyspace_report(int lambda, Prime p);

/// `lambda=<..> p=<..> gl_order=<full decimal> magnitude=10^<..>`
std::string format_report(const KeyspaceReport& report);

inline constexpr std::uint64_t kMaxBruteForceSpace = 10'000'000;

/// Counts invertible lambda x lambda matrices mod p by enumerating all
/// p^(lambda^2) of them. Throws SearchSpaceTooLarge beyond `max_space`.
std::uint64_t brute_force_gl_count(int lambda, Prime p, std::uint64_t max_space = kMaxBruteForceSpace);

}  // namespace lucas
