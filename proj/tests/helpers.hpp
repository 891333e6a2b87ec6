#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "lucas/matrices.hpp"
#include "oracles.hpp"

namespace testing {

inline lucas::ResidueMatrix residue_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                           lucas::Prime p) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  lucas::ExactMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return lucas::ResidueMatrix::reduce(m, p);
}

inline lucas::ExactMatrix exact_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  lucas::ExactMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline oracle::Mat to_oracle(const lucas::ResidueMatrix& m) {
  oracle::Mat out(m.order(), std::vector<std::int64_t>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

inline oracle::Mat to_oracle(const lucas::ExactMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::int64_t>(m(i, j));
  return out;
}

inline lucas::ResidueMatrix random_matrix(std::mt19937_64& rng, int k, lucas::Prime p) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p.value() - 1);
  lucas::ResidueMatrix::Storage s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = dist(rng);
  return lucas::ResidueMatrix(s, p);
}

}  // namespace testing
