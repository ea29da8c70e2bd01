#include <doctest.h>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/homology.hpp"

using namespace powq;

namespace {

FiniteGroup G(const std::string& s) { return catalog_from_string(s); }

AbelianInvariants T(std::vector<std::uint64_t> f) { return AbelianInvariants{std::move(f), 0}; }

}  // namespace

TEST_CASE("b_group") {
  CHECK(b_group(G("trivial")) == T({}));
  CHECK(b_group(G("symmetric(3)")) == T({2}));
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const AbelianInvariants b = b_group(G("cyclic(" + std::to_string(n) + ")"));
    CHECK(b == (n == 1 ? T({}) : T({static_cast<std::uint64_t>(n)})));
  }
  CHECK(b_group(G("dicyclic(8)")) == T({2, 2, 2}));
  CHECK(b_group(G("klein")) == T({2, 2, 2}));
}

TEST_CASE("b_group relation matrix has one column per class") {
  const FiniteGroup s3 = G("symmetric(3)");
  const IntMatrix r = b_group_relations(s3);
  CHECK(r.cols() == 3);
  CHECK(cokernel_invariants(r) == b_group(s3));
}

TEST_CASE("H2 of small groups") {
  for (long n = 1; n <= 8; ++n) {
    CHECK(bar_homology(G("cyclic(" + std::to_string(n) + ")"), 2) == T({}));
  }
  CHECK(bar_homology(G("klein"), 2) == T({2}));
  CHECK(bar_homology(G("symmetric(3)"), 2) == T({}));
  CHECK(bar_homology(G("dicyclic(8)"), 2) == T({}));
  CHECK(bar_homology(G("dihedral(8)"), 2) == T({2}));
  CHECK(bar_homology(G("alternating(4)"), 2) == T({2}));
  CHECK(bar_homology(G("product(cyclic(2),cyclic(2),cyclic(2))"), 2) == T({2, 2, 2}));
  CHECK(bar_homology(G("product(cyclic(4),cyclic(4))"), 2) == T({4}));
  CHECK(bar_homology(G("dicyclic(12)"), 2) == T({}));
}

TEST_CASE("H1 is the abelianization") {
  for (const auto& e : sweep_catalog(16)) {
    CAPTURE(e.label);
    CHECK(bar_homology(e.group, 1) == abelian_invariants(e.group));
  }
}

TEST_CASE("bar complex composes to zero") {
  for (const char* name : {"symmetric(3)", "klein", "cyclic(5)", "dicyclic(8)"}) {
    CAPTURE(name);
    const FiniteGroup g = G(name);
    const IntMatrix d2 = bar_differential(g, 2), d3 = bar_differential(g, 3);
    const auto k = static_cast<Eigen::Index>(g.order() - 1);
    CHECK(d2.rows() == k * k);
    CHECK(d2.cols() == k);
    CHECK(d3.rows() == k * k * k);
    const IntMatrix prod = d3 * d2;
    bool zero = true;
    for (Eigen::Index i = 0; i < prod.rows(); ++i) {
      for (Eigen::Index j = 0; j < prod.cols(); ++j) zero = zero && prod(i, j).is_zero();
    }
    CHECK(zero);
  }
}

TEST_CASE("homology errors") {
  CHECK_THROWS_AS(bar_homology(G("cyclic(17)"), 2), SizeBound);
  CHECK_NOTHROW(bar_homology(G("cyclic(17)"), 1, 17));
  CHECK_THROWS_AS(bar_homology(G("cyclic(3)"), 3), Error);
  CHECK_THROWS_AS(bar_differential(G("cyclic(3)"), 4), Error);
}
