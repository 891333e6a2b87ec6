#pragma once

#include <cstdint>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/numtheory.hpp"

namespace lucas {

/// Addresses term `index` of an order-`order` two-ended sequence.
struct SequenceSpec {
  int order;
  std::int64_t index;
};

/// f_{k,0..k-1} = 0, ..., 0, 1
std::vector<BigInt> fib_initials(int k);
/// l_{k,0..k-1} = k, 1, 3, 7, ..., 2^{k-1} - 1
std::vector<BigInt> lucas_initials(int k);

BigInt fib_term(SequenceSpec spec);
BigInt lucas_term(SequenceSpec spec);
Residue lucas_term_mod(SequenceSpec spec, Prime p);

/// Terms first..last (inclusive) of the order-k sequence seeded with `initials`
/// at indices 0..k-1. Forward steps sum the k previous terms; backward steps
/// solve the same relation for its lowest-index term.
std::vector<BigInt> term_range(const std::vector<BigInt>& initials, std::int64_t first, std::int64_t last);

std::vector<BigInt> fib_range(int k, std::int64_t first, std::int64_t last);
std::vector<BigInt> lucas_range(int k, std::int64_t first, std::int64_t last);
std::vector<Residue> lucas_range_mod(int k, std::int64_t first, std::int64_t last, Prime p);

}  // namespace lucas
