#include "lucas/sequences.hpp"

#include <deque>
#include <string>

#include "lucas/error.hpp"

namespace lucas {

namespace {

void require_order(int k) {
  if (k < 2) throw Error(Errc::OrderOutOfRange, "sequence order must be >= 2, got " + std::to_string(k));
}

// Walks a k-term window over the recurrence in either direction. T needs
// +, - and a reduction step supplied by Reduce.
template <class T, class Reduce>
std::vector<T> walk(const std::vector<T>& initials, std::int64_t first, std::int64_t last, Reduce reduce) {
  const auto k = static_cast<std::int64_t>(initials.size());
  std::vector<T> out;
  if (last < first) return out;
  out.reserve(static_cast<std::size_t>(last - first + 1));

  // window holds terms lo .. lo+k-1
  std::deque<T> window(initials.begin(), initials.end());
  std::int64_t lo = 0;
  while (lo > first) {
    T prev = window.back();
    for (std::int64_t i = 0; i + 1 < k; ++i) prev = reduce(prev - window[static_cast<std::size_t>(i)]);
    window.pop_back();
    window.push_front(prev);
    --lo;
  }
  while (lo + k - 1 < first) {
    T next = window.front();
    for (std::int64_t i = 1; i < k; ++i) next = reduce(next + window[static_cast<std::size_t>(i)]);
    window.pop_front();
    window.push_back(next);
    ++lo;
  }
  for (std::int64_t n = first; n <= last; ++n) {
    while (n > lo + k - 1) {
      T next = window.front();
      for (std::int64_t i = 1; i < k; ++i) next = reduce(next + window[static_cast<std::size_t>(i)]);
      window.pop_front();
      window.push_back(next);
      ++lo;
    }
    out.push_back(window[static_cast<std::size_t>(n - lo)]);
  }
  return out;
}

}  // namespace

std::vector<BigInt> fib_initials(int k) {
  require_order(k);
  std::vector<BigInt> v(static_cast<std::size_t>(k), 0);
  v.back() = 1;
  return v;
}

std::vector<BigInt> lucas_initials(int k) {
  require_order(k);
  std::vector<BigInt> v;
  v.reserve(static_cast<std::size_t>(k));
  v.emplace_back(k);
  for (int r = 1; r < k; ++r) v.push_back((BigInt(1) << r) - 1);
  return v;
}

std::vector<BigInt> term_range(const std::vector<BigInt>& initials, std::int64_t first, std::int64_t last) {
  require_order(static_cast<int>(initials.size()));
  return walk(initials, first, last, [](BigInt x) { return x; });
}

std::vector<BigInt> fib_range(int k, std::int64_t first, std::int64_t last) {
  return term_range(fib_initials(k), first, last);
}

std::vector<BigInt> lucas_range(int k, std::int64_t first, std::int64_t last) {
  return term_range(lucas_initials(k), first, last);
}

std::vector<Residue> lucas_range_mod(int k, std::int64_t first, std::int64_t last, Prime p) {
  const auto m = static_cast<std::int64_t>(p.value());
  std::vector<std::int64_t> seeds;
  for (const auto& v : lucas_initials(k)) seeds.push_back(static_cast<std::int64_t>(Residue::from_big(v, p).value()));
  auto terms = walk(seeds, first, last, [m](std::int64_t x) {
    x %= m;
    return x < 0 ? x + m : x;
  });
  std::vector<Residue> out;
  out.reserve(terms.size());
  for (auto t : terms) out.emplace_back(static_cast<std::uint64_t>(t), p);
  return out;
}

BigInt fib_term(SequenceSpec spec) { return fib_range(spec.order, spec.index, spec.index).front(); }

BigInt lucas_term(SequenceSpec spec) { return lucas_range(spec.order, spec.index, spec.index).front(); }

Residue lucas_term_mod(SequenceSpec spec, Prime p) {
  return lucas_range_mod(spec.order, spec.index, spec.index, p).front();
}

}  // namespace lucas
