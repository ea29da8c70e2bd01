#pragma once

// Brute-force reference computations used as test oracles. Deliberately naive:
// everything here works straight from the definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "powq/group.hpp"
#include "powq/int_matrix.hpp"
#include "powq/power_quandle.hpp"

namespace oracle {

using powq::FiniteGroup;
using powq::Index;
using powq::PowerQuandle;

inline bool hom_on_all_pairs(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Index>& f) {
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) {
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

// Calls visit(f) for every map with f[0] = 0 from a k-set into an n-set.
inline void for_each_pointed_map(std::size_t k, std::size_t n, const std::function<void(const std::vector<Index>&)>& visit) {
  std::vector<Index> f(k, 0);
  for (;;) {
    visit(f);
    std::size_t i = 1;
    while (i < k && f[i] + 1 == n) f[i++] = 0;
    if (i >= k) return;
    ++f[i];
  }
}

inline std::uint64_t count_homs(const FiniteGroup& g, const FiniteGroup& h) {
  std::uint64_t n = 0;
  for_each_pointed_map(g.order(), h.order(), [&](const std::vector<Index>& f) { n += hom_on_all_pairs(g, h, f); });
  return n;
}

inline bool is_pq_morphism(const PowerQuandle& p, const PowerQuandle& q, const std::vector<Index>& f) {
  if (f[p.unit()] != q.unit()) return false;
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = 0; b < p.size(); ++b) {
      if (f[p.conj(a, b)] != q.conj(f[a], f[b])) return false;
    }
  }
  const std::int64_t n = static_cast<std::int64_t>(std::lcm(p.exponent(), q.exponent()));
  for (Index a = 0; a < p.size(); ++a) {
    for (std::int64_t r = -n; r <= n; ++r) {
      if (f[p.power(r, a)] != q.power(r, f[a])) return false;
    }
  }
  return true;
}

// Units sit at index 0 for every power quandle the tests feed in here.
inline std::uint64_t count_pq_morphisms(const PowerQuandle& p, const PowerQuandle& q) {
  std::uint64_t n = 0;
  for_each_pointed_map(p.size(), q.size(), [&](const std::vector<Index>& f) { n += is_pq_morphism(p, q, f); });
  return n;
}

inline std::vector<Index> center(const FiniteGroup& g) {
  std::vector<Index> z;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Index b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline std::set<std::set<Index>> classes(const FiniteGroup& g) {
  std::set<std::set<Index>> out;
  for (Index a = 0; a < g.order(); ++a) {
    std::set<Index> c;
    for (Index x = 0; x < g.order(); ++x) c.insert(g.mul(g.mul(x, a), g.inv(x)));
    out.insert(c);
  }
  return out;
}

inline std::size_t involutions(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Index a = 1; a < g.order(); ++a) n += g.mul(a, a) == 0;
  return n;
}

// Subgroup generated by all commutators, by closure of the full commutator set.
inline std::set<Index> derived_subgroup(const FiniteGroup& g) {
  std::set<Index> s{0};
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) s.insert(g.commutator(a, b));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Index> cur(s.begin(), s.end());
    for (Index x : cur) {
      for (Index y : cur) grew |= s.insert(g.mul(x, y)).second;
    }
  }
  return s;
}

// Integer determinant by cofactor expansion; fine for the tiny sizes used.
inline powq::BigInt det(const powq::IntMatrix& a) {
  const auto n = a.rows();
  if (n == 0) return powq::BigInt(1);
  if (n == 1) return a(0, 0);
  powq::BigInt total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    powq::IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = a(r, c);
      }
    }
    const powq::BigInt term = a(0, j) * det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline powq::BigInt gcd(powq::BigInt a, powq::BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    powq::BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Determinantal divisors: D_k = gcd of all k x k minors. The Smith diagonal is
// d_k = D_k / D_{k-1}.
inline std::vector<powq::BigInt> smith_by_minors(const powq::IntMatrix& a) {
  const auto m = a.rows(), n = a.cols();
  const auto steps = std::min(m, n);
  std::vector<powq::BigInt> dk{powq::BigInt(1)};
  for (Eigen::Index k = 1; k <= steps; ++k) {
    powq::BigInt g(0);
    std::vector<int> rsel(static_cast<std::size_t>(m), 0), csel(static_cast<std::size_t>(n), 0);
    std::fill(rsel.end() - k, rsel.end(), 1);
    do {
      std::fill(csel.begin(), csel.end(), 0);
      std::fill(csel.end() - k, csel.end(), 1);
      do {
        powq::IntMatrix sub(k, k);
        for (Eigen::Index i = 0, r = 0; i < m; ++i) {
          if (!rsel[static_cast<std::size_t>(i)]) continue;
          for (Eigen::Index j = 0, c = 0; j < n; ++j) {
            if (csel[static_cast<std::size_t>(j)]) sub(r, c++) = a(i, j);
          }
          ++r;
        }
        g = gcd(g, det(sub));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    dk.push_back(g);
  }
  std::vector<powq::BigInt> d;
  for (std::size_t k = 1; k < dk.size(); ++k) {
    d.push_back(dk[k].is_zero() ? powq::BigInt(0) : dk[k] / dk[k - 1]);
  }
  return d;
}

}  // namespace oracle
