#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "powq/int_matrix.hpp"

using namespace powq;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

std::vector<BigInt> B(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

void check_snf(const IntMatrix& a) {
  const SmithResult<BigInt> r = smith_normal_form(a);
  CHECK(r.U * a * r.V == r.S);
  CHECK(determinant(r.U).abs() == BigInt(1));
  CHECK(determinant(r.V).abs() == BigInt(1));
  for (Eigen::Index i = 0; i < r.S.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.S.cols(); ++j) {
      if (i != j) CHECK(r.S(i, j).is_zero());
    }
  }
  for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
    CHECK(r.diagonal[i].sign() >= 0);
    if (i + 1 < r.diagonal.size()) {
      const BigInt& d = r.diagonal[i];
      const BigInt& e = r.diagonal[i + 1];
      CHECK((d.is_zero() ? e.is_zero() : (e % d).is_zero()));
    }
  }
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  const auto id = smith_normal_form<BigInt>(IntMatrix::Identity(3, 3));
  CHECK(id.diagonal == B({1, 1, 1}));
  const auto d23 = smith_normal_form(M({{2, 0}, {0, 3}}));
  CHECK(d23.diagonal == B({1, 6}));
  check_snf(M({{2, 0}, {0, 3}}));
  const auto z = smith_normal_form<BigInt>(IntMatrix::Zero(2, 3));
  CHECK(z.diagonal == B({0, 0}));
  const auto empty = smith_normal_form<BigInt>(IntMatrix(0, 3));
  CHECK(empty.diagonal.empty());
  CHECK(smith_normal_form(M({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).diagonal == B({2, 6, 12}));
}

TEST_CASE("CheckedInt path agrees with BigInt") {
  MatrixX<CheckedInt> a(2, 2);
  a << CheckedInt(4), CheckedInt(6), CheckedInt(6), CheckedInt(9);
  const auto r = smith_normal_form(a);
  CHECK(r.diagonal[0] == CheckedInt(1));
  CHECK(r.diagonal[1] == CheckedInt(0));
  CHECK(smith_diagonal(M({{4, 6}, {6, 9}})) == B({1, 0}));
  CHECK_THROWS_AS(CheckedInt(std::numeric_limits<long>::max()) + CheckedInt(1), std::overflow_error);
  // Entries near 2^62 overflow int64 during elimination; the BigInt fallback is exact.
  const long big = 1L << 62;
  const IntMatrix h = M({{big, 3}, {5, big}});
  const std::vector<BigInt> d = smith_diagonal(h);
  CHECK(d == oracle::smith_by_minors(h));
}

TEST_CASE("random SNF instances satisfy U A V = S and match determinantal divisors") {
  std::mt19937 rng(20240531);
  std::uniform_int_distribution<int> dim(0, 6), entry(-5, 5);
  for (int t = 0; t < 2000; ++t) {
    const int r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) a(i, j) = BigInt(entry(rng));
    }
    CAPTURE(to_text(a));
    check_snf(a);
    if (r <= 4 && c <= 4) CHECK(smith_normal_form(a).diagonal == oracle::smith_by_minors(a));
    CHECK(smith_diagonal(a) == smith_normal_form(a).diagonal);
  }
}

TEST_CASE("cokernel_invariants") {
  const AbelianInvariants free2 = cokernel_invariants(IntMatrix(0, 2));
  CHECK(free2.free_rank == 2);
  CHECK(free2.factors.empty());
  const AbelianInvariants one = cokernel_invariants(M({{2, 0}}));
  CHECK(one.factors == std::vector<std::uint64_t>{2});
  CHECK(one.free_rank == 1);
  CHECK(cokernel_invariants(M({{1}})).factors.empty());
  CHECK(cokernel_invariants(M({{1}})).free_rank == 0);
}

TEST_CASE("cokernel_invariants ignores row and column order and zero rows") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a(4, 5);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 5; ++j) a(i, j) = BigInt(entry(rng));
    }
    const AbelianInvariants base = cokernel_invariants(a);
    IntMatrix p = a;
    p.row(0).swap(p.row(3));
    p.col(1).swap(p.col(4));
    CHECK(cokernel_invariants(p) == base);
    IntMatrix z(6, 5);
    z.topRows(4) = a;
    z.bottomRows(2).setConstant(BigInt(0));
    CHECK(cokernel_invariants(z) == base);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(M({{2, 1}, {7, 4}})) == BigInt(1));
  CHECK(determinant(M({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == BigInt(-3));
  CHECK(determinant(IntMatrix(0, 0)) == BigInt(1));
}

TEST_CASE("matrix text dump") { CHECK(to_text(M({{1, -2}, {0, 3}})) == "1 -2\n0 3\n"); }
