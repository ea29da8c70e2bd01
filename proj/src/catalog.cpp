#include "powq/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "powq/error.hpp"

namespace powq {

namespace {

constexpr long kMaxCyclic = 1024;

FiniteGroup make(std::size_t k, const std::vector<Index>& table, std::vector<std::string> names) {
  return FiniteGroup::from_trusted_table(k, table, std::move(names));
}

long require_param(const std::string& name, std::span<const long> params) {
  if (params.size() != 1) {
    throw UnsupportedSize(name + " takes exactly one integer parameter");
  }
  return params[0];
}

FiniteGroup cyclic(long n) {
  if (n < 1 || n > kMaxCyclic) throw UnsupportedSize("cyclic(" + std::to_string(n) + ")");
  const auto k = static_cast<std::size_t>(n);
  std::vector<Index> t(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = i == 0 ? "e" : "a^" + std::to_string(i);
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = static_cast<Index>((i + j) % k);
  }
  return make(k, t, std::move(names));
}

// r^i s^j at index j*n + i.
FiniteGroup dihedral(long order) {
  if (order < 2 || order % 2 != 0 || order > kMaxCyclic) {
    throw UnsupportedSize("dihedral(" + std::to_string(order) + ")");
  }
  const auto n = static_cast<std::size_t>(order / 2);
  const std::size_t k = 2 * n;
  std::vector<Index> t(k * k);
  std::vector<std::string> names(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t i = x % n, a = x / n;
    names[x] = "r^" + std::to_string(i) + (a ? " s" : "");
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t j = y % n, b = y / n;
      const std::size_t r = a ? (i + n - j) % n : (i + j) % n;
      t[x * k + y] = static_cast<Index>(((a + b) % 2) * n + r);
    }
  }
  names[0] = "e";
  return make(k, t, std::move(names));
}

// a^i x^j at index j*2n + i, with x^2 = a^n and x a x^-1 = a^-1.
FiniteGroup dicyclic(long order) {
  if (order < 4 || order % 4 != 0 || order > kMaxCyclic) {
    throw UnsupportedSize("dicyclic(" + std::to_string(order) + ")");
  }
  const auto n = static_cast<std::size_t>(order / 4);
  const std::size_t m = 2 * n;
  const std::size_t k = 2 * m;
  std::vector<Index> t(k * k);
  std::vector<std::string> names(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t i = x % m, p = x / m;
    names[x] = "a^" + std::to_string(i) + (p ? " x" : "");
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t j = y % m, q = y / m;
      std::size_t r = p ? (i + m - j) % m : (i + j) % m;
      std::size_t s = p + q;
      if (s == 2) {
        r = (r + n) % m;
        s = 0;
      }
      t[x * k + y] = static_cast<Index>(s * m + r);
    }
  }
  names[0] = "e";
  return make(k, t, std::move(names));
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Permutations in lexicographic order; the product applies the right factor first.
FiniteGroup permutation_group(long n, bool even_only) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (even_only) {
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
      }
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t k = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Index> t(k * k);
  std::vector<std::string> names(k);
  std::vector<int> c(p.size());
  for (std::size_t x = 0; x < k; ++x) {
    names[x] = cycle_notation(perms[x]);
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = perms[x][static_cast<std::size_t>(perms[y][i])];
      }
      t[x * k + y] = index_of(c);
    }
  }
  return make(k, t, std::move(names));
}

// Upper unitriangular 3x3 matrices over Z/p; (a,b,c) at index (a*p + b)*p + c.
FiniteGroup heisenberg(long p) {
  if (p != 2 && p != 3 && p != 5) throw UnsupportedSize("heisenberg(" + std::to_string(p) + ")");
  const auto q = static_cast<std::size_t>(p);
  const std::size_t k = q * q * q;
  std::vector<Index> t(k * k);
  std::vector<std::string> names(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t a = x / (q * q), b = (x / q) % q, c = x % q;
    names[x] = "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
      const std::size_t ra = (a + a2) % q, rb = (b + b2) % q, rc = (c + c2 + a * b2) % q;
      t[x * k + y] = static_cast<Index>((ra * q + rb) * q + rc);
    }
  }
  return make(k, t, std::move(names));
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos) + " in \"" + s + "\"");
  }
  std::string ident() {
    skip();
    const std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) throw ParseError("expected a name at offset " + std::to_string(pos) + " in \"" + s + "\"");
    return s.substr(start, pos - start);
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-');
  }
  long number() {
    skip();
    std::size_t used = 0;
    const long v = std::stol(s.substr(pos), &used);
    pos += used;
    return v;
  }

  FiniteGroup group() {
    const std::string name = ident();
    if (name == "product") {
      expect('(');
      FiniteGroup acc = group();
      std::size_t factors = 1;
      while (accept(',')) {
        acc = direct_product(acc, group());
        ++factors;
      }
      expect(')');
      if (factors < 2) throw ParseError("product needs at least two factors");
      return acc;
    }
    std::vector<long> params;
    if (accept('(')) {
      if (!accept(')')) {
        do {
          if (!peek_digit()) throw ParseError("expected an integer in \"" + s + "\"");
          params.push_back(number());
        } while (accept(','));
        expect(')');
      }
    }
    return catalog(name, params);
  }
};

}  // namespace

FiniteGroup catalog(const std::string& name, std::span<const long> params) {
  if (name == "cyclic") return cyclic(require_param(name, params));
  if (name == "dihedral") return dihedral(require_param(name, params));
  if (name == "dicyclic") return dicyclic(require_param(name, params));
  if (name == "symmetric" || name == "alternating") {
    const long n = require_param(name, params);
    if (n < 1 || n > 5) throw UnsupportedSize(name + "(" + std::to_string(n) + ")");
    return permutation_group(n, name == "alternating");
  }
  if (name == "heisenberg") return heisenberg(require_param(name, params));
  if (name == "klein") {
    if (!params.empty()) throw UnsupportedSize("klein takes no parameters");
    return direct_product(cyclic(2), cyclic(2));
  }
  if (name == "trivial") {
    if (!params.empty()) throw UnsupportedSize("trivial takes no parameters");
    return FiniteGroup();
  }
  throw UnknownName("unknown group family '" + name + "'");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), n = h.order(), k = m * n;
  if (k > 4 * FiniteGroup::kTableLimit) {
    throw UnsupportedSize("direct product of order " + std::to_string(k) + " too large to tabulate");
  }
  std::vector<Index> t(k * k);
  std::vector<std::string> names;
  const bool named = !g.names().empty() && !h.names().empty();
  for (std::size_t x = 0; x < k; ++x) {
    const auto gx = static_cast<Index>(x / n), hx = static_cast<Index>(x % n);
    if (named) names.push_back("(" + g.names()[gx] + "," + h.names()[hx] + ")");
    for (std::size_t y = 0; y < k; ++y) {
      const auto gy = static_cast<Index>(y / n), hy = static_cast<Index>(y % n);
      t[x * k + y] = g.mul(gx, gy) * static_cast<Index>(n) + h.mul(hx, hy);
    }
  }
  return make(k, t, std::move(names));
}

FiniteGroup catalog_from_string(const std::string& expr) {
  Parser p{expr};
  FiniteGroup g = p.group();
  p.skip();
  if (p.pos != expr.size()) throw ParseError("trailing characters in \"" + expr + "\"");
  return g;
}

std::vector<std::string> catalog_families() {
  return {"cyclic", "klein", "dihedral", "dicyclic", "symmetric", "alternating",
          "heisenberg", "product(abelian invariant factors)", "product(non-abelian)"};
}

namespace {

// Invariant-factor sequences d_1 | d_2 | ... | d_m with m >= 2 and product n.
void abelian_shapes(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& prefix,
                    std::vector<std::vector<std::size_t>>& out) {
  // Build from the largest factor downwards: each next factor divides the previous.
  if (n == 1) {
    if (prefix.size() >= 2) out.emplace_back(prefix.rbegin(), prefix.rend());
    return;
  }
  for (std::size_t d = min_factor; d <= n; ++d) {
    if (n % d != 0) continue;
    if (!prefix.empty() && prefix.back() % d != 0) continue;
    prefix.push_back(d);
    abelian_shapes(n / d, 2, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CatalogEntry> sweep_catalog(std::size_t max_order) {
  std::vector<std::string> labels;
  auto add = [&](std::size_t order, std::string label) {
    if (order <= max_order) labels.push_back(std::move(label));
  };
  for (std::size_t n = 1; n <= max_order; ++n) add(n, "cyclic(" + std::to_string(n) + ")");
  add(4, "klein");
  for (std::size_t n = 4; n <= max_order; n += 2) add(n, "dihedral(" + std::to_string(n) + ")");
  for (std::size_t n = 8; n <= max_order; n += 4) add(n, "dicyclic(" + std::to_string(n) + ")");
  add(6, "symmetric(3)");
  add(24, "symmetric(4)");
  add(120, "symmetric(5)");
  add(12, "alternating(4)");
  add(60, "alternating(5)");
  add(8, "heisenberg(2)");
  add(27, "heisenberg(3)");
  add(125, "heisenberg(5)");
  for (std::size_t n = 4; n <= max_order; ++n) {
    std::vector<std::vector<std::size_t>> shapes;
    std::vector<std::size_t> prefix;
    abelian_shapes(n, 2, prefix, shapes);
    for (const auto& shape : shapes) {
      std::string label = "product(";
      for (std::size_t i = 0; i < shape.size(); ++i) {
        label += (i ? ",cyclic(" : "cyclic(") + std::to_string(shape[i]) + ")";
      }
      labels.push_back(label + ")");
    }
  }
  add(12, "product(cyclic(2),symmetric(3))");
  add(16, "product(cyclic(2),dihedral(8))");
  add(16, "product(cyclic(2),dicyclic(8))");
  add(18, "product(cyclic(3),symmetric(3))");
  add(24, "product(cyclic(2),alternating(4))");
  add(24, "product(cyclic(4),symmetric(3))");
  add(24, "product(cyclic(2),dicyclic(12))");
  add(32, "product(cyclic(4),dihedral(8))");
  add(32, "product(cyclic(4),dicyclic(8))");
  add(36, "product(symmetric(3),symmetric(3))");

  std::vector<CatalogEntry> out;
  for (auto& l : labels) {
    FiniteGroup g = catalog_from_string(l);
    out.push_back({std::move(l), std::move(g)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.label < b.label;
  });
  return out;
}

}  // namespace powq
