#include "powq/int_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "powq/error.hpp"

namespace powq {

namespace {

// Rows of `a` with zero rows and exact duplicates removed; the row lattice is unchanged.
std::vector<std::vector<BigInt>> distinct_rows(const IntMatrix& a) {
  std::vector<std::vector<BigInt>> rows;
  std::set<std::vector<BigInt>> seen;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<BigInt> row(a.row(i).begin(), a.row(i).end());
    if (std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x.is_zero(); })) continue;
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<BigInt> smith_diagonal(const IntMatrix& a) {
  const auto rows = distinct_rows(a);
  const auto m = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n = a.cols();
  std::vector<BigInt> out;
  const auto steps = static_cast<std::size_t>(std::min(a.rows(), a.cols()));

  bool fits = true;
  for (const auto& row : rows) {
    for (const auto& x : row) fits = fits && x.fits_int64();
  }
  if (fits) {
    try {
      MatrixX<CheckedInt> c(m, n);
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) c(i, j) = CheckedInt(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_int64());
      }
      auto r = detail::smith_impl<CheckedInt, false>(std::move(c));
      for (const auto& d : r.diagonal) out.emplace_back(d.value());
    } catch (const std::overflow_error&) {
      out.clear();
      fits = false;
    }
  }
  if (!fits) {
    IntMatrix b(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) b(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    out = detail::smith_impl<BigInt, false>(std::move(b)).diagonal;
  }
  out.resize(steps, BigInt(0));
  return out;
}

AbelianInvariants cokernel_invariants(const IntMatrix& a) {
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const auto& d : smith_diagonal(a)) {
    if (d.is_zero()) continue;
    ++rank;
    if (d == BigInt(1)) continue;
    if (!d.fits_int64()) throw Error("invariant factor " + d.to_string() + " exceeds 64 bits");
    inv.factors.push_back(static_cast<std::uint64_t>(d.to_int64()));
  }
  inv.free_rank = static_cast<std::size_t>(a.cols()) - rank;
  return inv;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return BigInt(1);
  IntMatrix m = a;
  BigInt sign(1), prev(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n && swap < 0; ++i) {
        if (!m(i, k).is_zero()) swap = i;
      }
      if (swap < 0) return BigInt(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_text(const IntMatrix& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace powq
