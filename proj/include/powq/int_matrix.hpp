#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <limits>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powq/group.hpp"

namespace powq {

/// Arbitrary-precision integer usable as an Eigen scalar.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT: implicit from literals, as for built-in integers
  BigInt(int v) : v_(v) {}   // NOLINT
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  /// Quotient truncated toward zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ / b.v_)); }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ % b.v_)); }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& b) { v_ += b.v_; return *this; }
  BigInt& operator-=(const BigInt& b) { v_ -= b.v_; return *this; }
  BigInt& operator*=(const BigInt& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) <=> 0; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
  bool fits_int64() const { return v_.fits_slong_p(); }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits");
    return v_.get_si();
  }
  std::string to_string() const { return v_.get_str(); }
  const mpz_class& mpz() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

 private:
  mpz_class v_;
};

/// 64-bit integer whose arithmetic throws std::overflow_error instead of wrapping.
class CheckedInt {
 public:
  CheckedInt() = default;
  CheckedInt(long v) : v_(v) {}  // NOLINT
  CheckedInt(int v) : v_(v) {}   // NOLINT

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt add");
    return CheckedInt(r);
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt sub");
    return CheckedInt(r);
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt mul");
    return CheckedInt(r);
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<long>::min() && b.v_ == -1) throw std::overflow_error("CheckedInt div");
    return CheckedInt(a.v_ / b.v_);
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == -1) return CheckedInt(0);
    return CheckedInt(a.v_ % b.v_);
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }
  CheckedInt& operator-=(CheckedInt b) { return *this = *this - b; }
  CheckedInt& operator*=(CheckedInt b) { return *this = *this * b; }

  friend bool operator==(CheckedInt a, CheckedInt b) = default;
  friend auto operator<=>(CheckedInt a, CheckedInt b) = default;

  bool is_zero() const { return v_ == 0; }
  int sign() const { return (v_ > 0) - (v_ < 0); }
  CheckedInt abs() const { return v_ < 0 ? -*this : *this; }
  long value() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, CheckedInt a) { return os << a.v_; }

 private:
  long v_ = 0;
};

}  // namespace powq

namespace Eigen {

template <>
struct NumTraits<powq::BigInt> : GenericNumTraits<powq::BigInt> {
  using Real = powq::BigInt;
  using NonInteger = powq::BigInt;
  using Literal = powq::BigInt;
  using Nested = powq::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 80
  };
};

template <>
struct NumTraits<powq::CheckedInt> : GenericNumTraits<powq::CheckedInt> {
  using Real = powq::CheckedInt;
  using NonInteger = powq::CheckedInt;
  using Literal = powq::CheckedInt;
  using Nested = powq::CheckedInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace powq {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer matrix; as a relation matrix each row is one relation on Z^cols.
using IntMatrix = MatrixX<BigInt>;

/// S = U * A * V with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
template <typename Scalar>
struct SmithResult {
  MatrixX<Scalar> S;
  MatrixX<Scalar> U;
  MatrixX<Scalar> V;
  std::vector<Scalar> diagonal;  // min(rows, cols) entries
};

namespace detail {

// Smallest-|entry| pivoting with deterministic row-major scans. When `Track`
// is false, U and V stay empty.
template <typename Scalar, bool Track>
SmithResult<Scalar> smith_impl(MatrixX<Scalar> a) {
  using Index = Eigen::Index;
  const Index m = a.rows(), n = a.cols();
  SmithResult<Scalar> r;
  if constexpr (Track) {
    r.U = MatrixX<Scalar>::Identity(m, m);
    r.V = MatrixX<Scalar>::Identity(n, n);
  }
  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if constexpr (Track) r.U.row(i).swap(r.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if constexpr (Track) r.V.col(i).swap(r.V.col(j));
  };
  // row_i -= q * row_t over the active columns.
  auto row_axpy = [&](Index i, Index t, const Scalar& q, Index from) {
    for (Index j = from; j < n; ++j) {
      if (!a(t, j).is_zero()) a(i, j) -= q * a(t, j);
    }
    if constexpr (Track) r.U.row(i) -= q * r.U.row(t);
  };
  auto col_axpy = [&](Index j, Index t, const Scalar& q, Index from) {
    for (Index i = from; i < m; ++i) {
      if (!a(i, t).is_zero()) a(i, j) -= q * a(i, t);
    }
    if constexpr (Track) r.V.col(j) -= q * r.V.col(t);
  };

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    Index pi = -1, pj = -1;
    Scalar best;
    for (Index i = t; i < m; ++i) {
      for (Index j = t; j < n; ++j) {
        if (a(i, j).is_zero()) continue;
        Scalar v = a(i, j).abs();
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        Scalar q = a(i, t) / a(t, t);
        if (!q.is_zero()) row_axpy(i, t, q, t);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        Scalar q = a(t, j) / a(t, t);
        if (!q.is_zero()) col_axpy(j, t, q, t);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        Index bi = t, bj = t;
        Scalar bv = a(t, t).abs();
        for (Index i = t + 1; i < m; ++i) {
          if (!a(i, t).is_zero() && a(i, t).abs() < bv) {
            bv = a(i, t).abs();
            bi = i;
            bj = t;
          }
        }
        for (Index j = t + 1; j < n; ++j) {
          if (!a(t, j).is_zero() && a(t, j).abs() < bv) {
            bv = a(t, j).abs();
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (!(a(i, j) % a(t, t)).is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      // Row t picks up entries the pivot does not divide.
      for (Index j = t; j < n; ++j) a(t, j) += a(bad, j);
      if constexpr (Track) r.U.row(t) += r.U.row(bad);
    }
    if (a(t, t).sign() < 0) {
      a.row(t) = -a.row(t);
      if constexpr (Track) r.U.row(t) = -r.U.row(t);
    }
  }
  r.diagonal.reserve(static_cast<std::size_t>(steps));
  for (Index t = 0; t < steps; ++t) r.diagonal.push_back(a(t, t));
  r.S = std::move(a);
  return r;
}

}  // namespace detail

/// Smith normal form with unimodular transforms. Scalar may be BigInt or CheckedInt.
template <typename Scalar>
SmithResult<Scalar> smith_normal_form(const MatrixX<Scalar>& a) {
  return detail::smith_impl<Scalar, true>(a);
}

/// Smith diagonal only. Runs in checked 64-bit arithmetic and falls back to
/// BigInt if any intermediate overflows; zero and duplicate rows are dropped first.
std::vector<BigInt> smith_diagonal(const IntMatrix& a);

/// Invariants of Z^cols / (row lattice of a).
AbelianInvariants cokernel_invariants(const IntMatrix& a);

/// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& a);

/// Debug dump: one row per line, entries separated by single spaces.
std::string to_text(const IntMatrix& a);

}  // namespace powq
