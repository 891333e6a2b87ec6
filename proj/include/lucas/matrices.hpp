#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "lucas/bigint.hpp"
#include "lucas/numtheory.hpp"

namespace lucas {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Signed integer matrix, used before reduction mod p.
using ExactMatrix = DenseMatrix<BigInt>;

/// Orders above this are refused by the GFM/GLM constructors unless the
/// caller passes a larger cap.
inline constexpr int kDefaultMaxOrder = 64;

/// Square matrix over Z/pZ. Entries are kept reduced into [0, p).
class ResidueMatrix {
 public:
  using Storage = DenseMatrix<std::uint64_t>;

  ResidueMatrix(Storage entries, Prime modulus);

  static ResidueMatrix identity(int order, Prime modulus);
  /// Entrywise reduction of an integer matrix (floor semantics for negatives).
  static ResidueMatrix reduce(const ExactMatrix& exact, Prime modulus);

  int order() const noexcept { return static_cast<int>(entries_.rows()); }
  Prime modulus() const noexcept { return modulus_; }
  std::uint64_t operator()(int row, int col) const { return entries_(row, col); }
  const Storage& entries() const noexcept { return entries_; }

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
  }

 private:
  Storage entries_;
  Prime modulus_;
};

/// Rows of space-separated decimal residues, one row per line.
std::ostream& operator<<(std::ostream& os, const ResidueMatrix& m);

// Initial generalized Fibonacci matrices.

/// Companion form: first row all ones, ones on the subdiagonal.
template <class Scalar = BigInt>
DenseMatrix<Scalar> q_one(int k) {
  DenseMatrix<Scalar> q = DenseMatrix<Scalar>::Zero(k, k);
  for (int j = 0; j < k; ++j) q(0, j) = Scalar(1);
  for (int i = 1; i < k; ++i) q(i, i - 1) = Scalar(1);
  return q;
}

/// Inverse of q_one: ones on the superdiagonal, last row 1, -1, ..., -1.
template <class Scalar = BigInt>
DenseMatrix<Scalar> q_inverse_one(int k) {
  DenseMatrix<Scalar> q = DenseMatrix<Scalar>::Zero(k, k);
  for (int i = 0; i + 1 < k; ++i) q(i, i + 1) = Scalar(1);
  q(k - 1, 0) = Scalar(1);
  for (int j = 1; j < k; ++j) q(k - 1, j) = Scalar(-1);
  return q;
}

/// Lays out the recursive-matrix template from a two-ended sequence:
/// column 1 of row r holds t_{k+n-1-r}, column j >= 2 of row r holds
/// t_{k+n-2-r} + ... + t_{n-r+j-2}. `terms[i]` must be t_{n-k+1+i},
/// i.e. the range n-k+1 .. n+k-1.
ExactMatrix recursive_matrix(int k, std::int64_t n, const std::vector<BigInt>& terms);

/// Q_k^n laid out from exact Fibonacci terms.
ExactMatrix gfm_template(int k, std::int64_t n);
/// L_k^(n) laid out from exact Lucas terms.
ExactMatrix glm_template(int k, std::int64_t n);
/// L_k^(0).
ExactMatrix glm_initial(int k);

/// Non-negative integer power by repeated squaring, for any Eigen scalar.
template <class Derived>
DenseMatrix<typename Derived::Scalar> exact_pow(const Eigen::MatrixBase<Derived>& base, std::uint64_t exp) {
  using M = DenseMatrix<typename Derived::Scalar>;
  M result = M::Identity(base.rows(), base.cols());
  M square = base;
  while (exp != 0) {
    if (exp & 1U) result = (result * square).eval();
    exp >>= 1U;
    if (exp != 0) square = (square * square).eval();
  }
  return result;
}

/// Determinant over the integers (fraction-free Bareiss elimination).
BigInt exact_det(const ExactMatrix& a);

template <class Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  return a.trace();
}
Residue trace(const ResidueMatrix& a);

// Algebra over Z/pZ.

ResidueMatrix mat_mul(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix mat_pow(const ResidueMatrix& a, std::uint64_t exp);
Residue mat_det(const ResidueMatrix& a);
/// Gauss-Jordan inverse. Throws NotInvertible when det = 0 mod p.
ResidueMatrix mat_inverse(const ResidueMatrix& a);

// GFM / GLM families mod p.

/// Q_k^n mod p. Negative n raises q_inverse_one to |n|.
ResidueMatrix gfm(int k, std::int64_t n, Prime p, int max_order = kDefaultMaxOrder);
/// L_k^(n) mod p = Q_k^n L_k^(0).
ResidueMatrix glm(int k, std::int64_t n, Prime p, int max_order = kDefaultMaxOrder);
/// H = (L_k^(0))^2 mod p.
ResidueMatrix glm_h(int k, Prime p, int max_order = kDefaultMaxOrder);
/// Inverse of L_k^(n) as L_k^(-n) H^{-1}. Throws NotInvertible when H is singular mod p.
ResidueMatrix glm_closed_inverse(int k, std::int64_t n, Prime p, int max_order = kDefaultMaxOrder);

}  // namespace lucas
