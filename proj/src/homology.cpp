#include "powq/homology.hpp"

#include "powq/error.hpp"

namespace powq {

IntMatrix b_group_relations(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<Index> class_of(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Index a : classes[c]) class_of[a] = static_cast<Index>(c);
  }
  const std::uint64_t n_max = exponent(g);
  const auto rows = static_cast<Eigen::Index>(g.order() * (n_max + 1));
  IntMatrix m = IntMatrix::Zero(rows, static_cast<Eigen::Index>(classes.size()));
  Eigen::Index row = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Index power = 0;  // a^n, built incrementally
    for (std::uint64_t n = 0; n <= n_max; ++n, ++row) {
      m(row, class_of[a]) += BigInt(static_cast<long>(n));
      m(row, class_of[power]) -= BigInt(1);
      power = g.mul(power, static_cast<Index>(a));
    }
  }
  return m;
}

AbelianInvariants b_group(const FiniteGroup& g) { return cokernel_invariants(b_group_relations(g)); }

IntMatrix bar_differential(const FiniteGroup& g, int degree) {
  const std::size_t k = g.order();
  const std::size_t b = k - 1;  // non-identity elements
  auto idx1 = [](Index x) { return static_cast<Eigen::Index>(x - 1); };
  auto idx2 = [b](Index x, Index y) { return static_cast<Eigen::Index>((x - 1) * b + (y - 1)); };
  if (degree == 2) {
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(b * b), static_cast<Eigen::Index>(b));
    for (Index x = 1; x < k; ++x) {
      for (Index y = 1; y < k; ++y) {
        const Eigen::Index row = idx2(x, y);
        const Index xy = g.mul(x, y);
        m(row, idx1(y)) += BigInt(1);
        if (xy != 0) m(row, idx1(xy)) -= BigInt(1);
        m(row, idx1(x)) += BigInt(1);
      }
    }
    return m;
  }
  if (degree == 3) {
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(b * b * b), static_cast<Eigen::Index>(b * b));
    Eigen::Index row = 0;
    for (Index x = 1; x < k; ++x) {
      for (Index y = 1; y < k; ++y) {
        const Index xy = g.mul(x, y);
        for (Index z = 1; z < k; ++z, ++row) {
          const Index yz = g.mul(y, z);
          m(row, idx2(y, z)) += BigInt(1);
          if (xy != 0) m(row, idx2(xy, z)) -= BigInt(1);
          if (yz != 0) m(row, idx2(x, yz)) += BigInt(1);
          m(row, idx2(x, y)) -= BigInt(1);
        }
      }
    }
    return m;
  }
  throw Error("bar_differential supports degrees 2 and 3");
}

AbelianInvariants bar_homology(const FiniteGroup& g, int degree, std::size_t bound) {
  if (degree != 1 && degree != 2) throw Error("bar_homology supports degrees 1 and 2");
  if (g.order() > bound) {
    throw SizeBound("bar homology limited to |G| <= " + std::to_string(bound) + ", got " +
                    std::to_string(g.order()));
  }
  if (g.order() == 1) return {};
  const IntMatrix d2 = bar_differential(g, 2);
  if (degree == 1) return cokernel_invariants(d2);  // the degree-1 differential vanishes

  // C_2 / im d3 = (C_2 / ker d2) + (ker d2 / im d3) with the first summand free,
  // so the torsion of coker(d3) is the torsion of H_2.
  std::size_t rank2 = 0;
  for (const auto& d : smith_diagonal(d2)) rank2 += d.is_zero() ? 0 : 1;
  const AbelianInvariants c3 = cokernel_invariants(bar_differential(g, 3));
  AbelianInvariants h2;
  h2.factors = c3.factors;
  h2.free_rank = c3.free_rank - rank2;
  return h2;
}

}  // namespace powq
