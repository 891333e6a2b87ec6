#include "lucas/matrices.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "lucas/error.hpp"
#include "lucas/sequences.hpp"

namespace lucas {

namespace {

void require_order(int k, int max_order) {
  if (k < 2 || k > max_order) {
    throw Error(Errc::OrderOutOfRange,
                "matrix order " + std::to_string(k) + " outside [2, " + std::to_string(max_order) + "]");
  }
}

void require_compatible(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::DimensionMismatch,
                "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) + " differ");
  }
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::ModulusMismatch, "moduli " + std::to_string(a.modulus().value()) + " and " +
                                           std::to_string(b.modulus().value()) + " differ");
  }
}

}  // namespace

ResidueMatrix::ResidueMatrix(Storage entries, Prime modulus) : entries_(std::move(entries)), modulus_(modulus) {
  if (entries_.rows() != entries_.cols()) throw Error(Errc::DimensionMismatch, "residue matrix must be square");
  entries_ = entries_.unaryExpr([m = modulus.value()](std::uint64_t v) { return v % m; });
}

ResidueMatrix ResidueMatrix::identity(int order, Prime modulus) {
  return ResidueMatrix(Storage::Identity(order, order), modulus);
}

ResidueMatrix ResidueMatrix::reduce(const ExactMatrix& exact, Prime modulus) {
  Storage s(exact.rows(), exact.cols());
  for (Eigen::Index i = 0; i < exact.rows(); ++i) {
    for (Eigen::Index j = 0; j < exact.cols(); ++j) s(i, j) = Residue::from_big(exact(i, j), modulus).value();
  }
  return ResidueMatrix(std::move(s), modulus);
}

std::ostream& operator<<(std::ostream& os, const ResidueMatrix& m) {
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (j != 0) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

ExactMatrix recursive_matrix(int k, std::int64_t n, const std::vector<BigInt>& terms) {
  if (terms.size() != static_cast<std::size_t>(2 * k - 1)) {
    throw Error(Errc::DimensionMismatch, "recursive_matrix needs 2k-1 terms");
  }
  const std::int64_t base = n - k + 1;
  auto term = [&](std::int64_t index) -> const BigInt& { return terms[static_cast<std::size_t>(index - base)]; };

  ExactMatrix m(k, k);
  for (int r = 0; r < k; ++r) {
    m(r, 0) = term(k + n - 1 - r);
    // column j (1-based) sums t_{k+n-2-r} down to t_{n-r+j-2}
    for (int j = 2; j <= k; ++j) {
      BigInt sum = 0;
      for (std::int64_t idx = k + n - 2 - r; idx >= n - r + j - 2; --idx) sum += term(idx);
      m(r, j - 1) = sum;
    }
  }
  return m;
}

ExactMatrix gfm_template(int k, std::int64_t n) {
  require_order(k, k);
  return recursive_matrix(k, n, fib_range(k, n - k + 1, n + k - 1));
}

ExactMatrix glm_template(int k, std::int64_t n) {
  require_order(k, k);
  return recursive_matrix(k, n, lucas_range(k, n - k + 1, n + k - 1));
}

ExactMatrix glm_initial(int k) { return glm_template(k, 0); }

BigInt exact_det(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "determinant needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  ExactMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Residue trace(const ResidueMatrix& a) {
  const std::uint64_t p = a.modulus().value();
  std::uint64_t t = 0;
  for (int i = 0; i < a.order(); ++i) t = add_mod(t, a(i, i), p);
  return Residue(t, a.modulus());
}

ResidueMatrix mat_mul(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_compatible(a, b);
  const std::uint64_t p = a.modulus().value();
  const int k = a.order();
  ResidueMatrix::Storage c = ResidueMatrix::Storage::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const std::uint64_t ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < k; ++j) c(i, j) = add_mod(c(i, j), mul_mod(ail, b(l, j), p), p);
    }
  }
  return ResidueMatrix(std::move(c), a.modulus());
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) { return mat_mul(a, b); }

ResidueMatrix mat_pow(const ResidueMatrix& a, std::uint64_t exp) {
  ResidueMatrix result = ResidueMatrix::identity(a.order(), a.modulus());
  ResidueMatrix square = a;
  while (exp != 0) {
    if (exp & 1U) result = result * square;
    exp >>= 1U;
    if (exp != 0) square = square * square;
  }
  return result;
}

namespace {

// Row-reduces `m` (and `aug` alongside, when given) to reduced echelon form.
// Returns the determinant of the original `m`. Pivots are the first nonzero
// entry found scanning down the column.
std::uint64_t eliminate(ResidueMatrix::Storage& m, ResidueMatrix::Storage* aug, std::uint64_t p) {
  const Eigen::Index n = m.rows();
  std::uint64_t det = 1 % p;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      if (aug) aug->row(pivot).swap(aug->row(col));
      det = sub_mod(0, det, p);
    }
    const std::uint64_t pv = m(col, col);
    det = mul_mod(det, pv, p);
    const std::uint64_t inv = pow_mod(pv, p - 2, p);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(col, j) = mul_mod(m(col, j), inv, p);
      if (aug) (*aug)(col, j) = mul_mod((*aug)(col, j), inv, p);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      // Only rows below matter for the determinant; the inverse also clears above.
      if (i == col || (!aug && i < col)) continue;
      const std::uint64_t f = m(i, col);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = sub_mod(m(i, j), mul_mod(f, m(col, j), p), p);
        if (aug) (*aug)(i, j) = sub_mod((*aug)(i, j), mul_mod(f, (*aug)(col, j), p), p);
      }
    }
  }
  return det;
}

}  // namespace

Residue mat_det(const ResidueMatrix& a) {
  ResidueMatrix::Storage m = a.entries();
  return Residue(eliminate(m, nullptr, a.modulus().value()), a.modulus());
}

ResidueMatrix mat_inverse(const ResidueMatrix& a) {
  ResidueMatrix::Storage m = a.entries();
  ResidueMatrix::Storage inv = ResidueMatrix::Storage::Identity(a.order(), a.order());
  if (eliminate(m, &inv, a.modulus().value()) == 0) {
    throw Error(Errc::NotInvertible, "matrix is singular mod " + std::to_string(a.modulus().value()));
  }
  return ResidueMatrix(std::move(inv), a.modulus());
}

ResidueMatrix gfm(int k, std::int64_t n, Prime p, int max_order) {
  require_order(k, max_order);
  if (n >= 0) return mat_pow(ResidueMatrix::reduce(q_one(k), p), static_cast<std::uint64_t>(n));
  // -n overflows for INT64_MIN; |n| as unsigned is well defined.
  const std::uint64_t magnitude = 0 - static_cast<std::uint64_t>(n);
  return mat_pow(ResidueMatrix::reduce(q_inverse_one(k), p), magnitude);
}

ResidueMatrix glm(int k, std::int64_t n, Prime p, int max_order) {
  require_order(k, max_order);
  return gfm(k, n, p, max_order) * ResidueMatrix::reduce(glm_initial(k), p);
}

ResidueMatrix glm_h(int k, Prime p, int max_order) {
  require_order(k, max_order);
  const ResidueMatrix l0 = ResidueMatrix::reduce(glm_initial(k), p);
  return l0 * l0;
}

ResidueMatrix glm_closed_inverse(int k, std::int64_t n, Prime p, int max_order) {
  require_order(k, max_order);
  const ResidueMatrix l0 = ResidueMatrix::reduce(glm_initial(k), p);
  const ResidueMatrix h_inverse = mat_inverse(l0 * l0);
  const std::uint64_t magnitude = n >= 0 ? static_cast<std::uint64_t>(n) : 0 - static_cast<std::uint64_t>(n);
  // L^(-n) = Q^(-n) L^(0)
  const ResidueMatrix q_neg = n >= 0 ? mat_pow(ResidueMatrix::reduce(q_inverse_one(k), p), magnitude)
                                     : mat_pow(ResidueMatrix::reduce(q_one(k), p), magnitude);
  return q_neg * l0 * h_inverse;
}

}  // namespace lucas
