#include "powq/power_quandle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "powq/error.hpp"

namespace powq {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

using Witness = std::vector<std::size_t>;

std::string witness_text(const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

[[noreturn]] void violation(int axiom, Witness w, const std::string& what) {
  const std::string text = "axiom A" + std::to_string(axiom) + " fails at " + witness_text(w) + ": " + what;
  throw AxiomViolation(axiom, std::move(w), text);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Orbit label per element (orbits numbered by smallest member) and the orbit lists.
std::pair<std::vector<Index>, std::vector<std::vector<Index>>> orbit_partition(const PowerQuandle& p) {
  const std::size_t k = p.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t x = find_root(parent, p.conj(static_cast<Index>(a), static_cast<Index>(b)));
      const std::size_t y = find_root(parent, b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<Index> label(k, kNone);
  std::vector<std::vector<Index>> classes;
  std::vector<Index> root_label(k, kNone);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t r = find_root(parent, a);
    if (root_label[r] == kNone) {
      root_label[r] = static_cast<Index>(classes.size());
      classes.emplace_back();
    }
    label[a] = root_label[r];
    classes[label[a]].push_back(static_cast<Index>(a));
  }
  return {std::move(label), std::move(classes)};
}

std::vector<std::size_t> divisors_of(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

PowerQuandle PowerQuandle::validate(std::size_t size, Index unit, std::size_t exponent,
                                    std::vector<Index> conj, std::vector<Index> pow) {
  const std::size_t k = size;
  const std::size_t n = exponent;
  if (k == 0) throw ParseError("power quandle size must be positive");
  if (n == 0) throw ParseError("power quandle exponent must be positive");
  if (unit >= k) throw ParseError("unit out of range");
  if (conj.size() != k * k) throw ParseError("conj table must have size*size entries");
  if (pow.size() != n * k) throw ParseError("pow table must have exponent*size entries");
  for (Index x : conj) {
    if (x >= k) throw ParseError("conj entry out of range");
  }
  for (Index x : pow) {
    if (x >= k) throw ParseError("pow entry out of range");
  }

  auto c = [&](std::size_t a, std::size_t b) -> std::size_t { return conj[a * k + b]; };
  auto t = [&](std::size_t r, std::size_t a) -> std::size_t { return pow[r * k + a]; };

  for (std::size_t a = 0; a < k; ++a) {
    if (c(a, a) != a) violation(1, {a}, "a|>a != a");
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t x = 0; x < k; ++x) {
        if (b < x && c(a, b) == c(a, x)) violation(2, {a, b, x}, "left multiplication is not injective");
        if (c(a, c(b, x)) != c(c(a, b), c(a, x))) violation(2, {a, b, x}, "not self-distributive");
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (c(unit, a) != a) violation(3, {a}, "e|>a != a");
    if (c(a, unit) != unit) violation(3, {a}, "a|>e != e");
  }
  const std::size_t one = 1 % n;
  for (std::size_t a = 0; a < k; ++a) {
    if (t(one, a) != a) violation(4, {a}, "pi^1 is not the identity");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        if (t(r, t(s, a)) != t((r * s) % n, a)) violation(5, {r, s, a}, "tau_r tau_s != tau_{rs}");
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (t(r, unit) != unit) violation(6, {r}, "tau_r(e) != e");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (c(a, t(r, b)) != t(r, c(a, b))) violation(7, {r, a, b}, "a|>tau_r(b) != tau_r(a|>b)");
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t expect = b;  // lambda_a^r(b); r = 0 stands for pi^N, which must act trivially
        for (std::size_t i = 0; i < r; ++i) expect = c(a, expect);
        if (c(t(r, a), b) != expect) violation(8, {r, a, b}, "tau_r(a)|>b != lambda_a^r(b)");
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t x = b;
      for (std::size_t i = 0; i < n; ++i) x = c(a, x);
      if (x != b) violation(9, {a, b}, "lambda_a^N != id");
    }
  }

  PowerQuandle p;
  p.k_ = k;
  p.unit_ = unit;
  p.n_ = n;
  p.conj_ = std::move(conj);
  p.pow_ = std::move(pow);
  return p;
}

Index PowerQuandle::power(std::int64_t n, Index a) const {
  if (n == 0) return unit_;
  const auto period = static_cast<std::int64_t>(n_);
  std::int64_t r = n % period;
  if (r < 0) r += period;
  return tau(static_cast<std::size_t>(r), a);
}

PowerQuandle validate_pq(std::size_t size, Index unit, std::size_t exponent,
                         std::vector<Index> conj, std::vector<Index> pow) {
  return PowerQuandle::validate(size, unit, exponent, std::move(conj), std::move(pow));
}

PowerQuandle pq_of_group(const FiniteGroup& g) {
  const std::size_t k = g.order();
  if (k > 4 * FiniteGroup::kTableLimit) {
    throw SizeBound("power quandle of a group of order " + std::to_string(k) + " is too large to tabulate");
  }
  const auto n = static_cast<std::size_t>(exponent(g));
  std::vector<Index> conj(k * k), pow(n * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) conj[a * k + b] = g.conj(static_cast<Index>(a), static_cast<Index>(b));
  }
  for (std::size_t a = 0; a < k; ++a) {
    Index x = 0;  // a^r
    for (std::size_t r = 1; r <= n; ++r) {
      x = g.mul(x, static_cast<Index>(a));
      pow[(r % n) * k + a] = x;
    }
  }
  return PowerQuandle::validate(k, 0, n, std::move(conj), std::move(pow));
}

PowerQuandle canonical_exponent(const PowerQuandle& p) {
  const std::size_t k = p.size(), n = p.exponent();
  for (std::size_t d : divisors_of(n)) {
    bool periodic = true;
    for (std::size_t r = d; r < n && periodic; ++r) {
      for (std::size_t a = 0; a < k && periodic; ++a) {
        periodic = p.tau(r, static_cast<Index>(a)) == p.tau(r % d, static_cast<Index>(a));
      }
    }
    if (!periodic) continue;
    if (d == n) return p;
    std::vector<Index> conj(p.conj_table().begin(), p.conj_table().end());
    std::vector<Index> pow(p.pow_table().begin(), p.pow_table().begin() + static_cast<std::ptrdiff_t>(d * k));
    return PowerQuandle::validate(k, p.unit(), d, std::move(conj), std::move(pow));
  }
  return p;
}

OrbitPq orbits(const PowerQuandle& p) {
  auto [label, classes] = orbit_partition(p);
  const std::size_t m = classes.size(), n = p.exponent();
  std::vector<Index> conj(m * m), pow(n * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) conj[i * m + j] = static_cast<Index>(j);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < m; ++i) pow[r * m + i] = label[p.tau(r, classes[i].front())];
  }
  PowerQuandle q = PowerQuandle::validate(m, label[p.unit()], n, std::move(conj), std::move(pow));
  return OrbitPq{std::move(q), std::move(label), std::move(classes)};
}

std::vector<Index> pq_center(const PowerQuandle& p) {
  std::vector<Index> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    bool trivial = true;
    for (std::size_t b = 0; b < p.size() && trivial; ++b) {
      trivial = p.conj(static_cast<Index>(a), static_cast<Index>(b)) == b;
    }
    if (trivial) out.push_back(static_cast<Index>(a));
  }
  return out;
}

bool PqFingerprint::same_invariants(const PqFingerprint& o) const {
  return size == o.size && exponent == o.exponent && num_orbits == o.num_orbits &&
         center_size == o.center_size && involutions == o.involutions &&
         sorted_signatures == o.sorted_signatures;
}

PqFingerprint fingerprint(const PowerQuandle& input) {
  const PowerQuandle p = canonical_exponent(input);
  const std::size_t k = p.size(), n = p.exponent();
  auto [label, classes] = orbit_partition(p);

  PqFingerprint fp;
  fp.size = k;
  fp.exponent = n;
  fp.num_orbits = classes.size();
  fp.center_size = pq_center(p).size();
  fp.elements.resize(k);
  fp.power_orbits.resize(k);
  const Index pi2_row = static_cast<Index>(2 % n);
  for (std::size_t a = 0; a < k; ++a) {
    const auto x = static_cast<Index>(a);
    ElementSignature& s = fp.elements[a];
    s.orbit_size = classes[label[a]].size();
    std::vector<char> seen(k, 0);
    for (std::size_t b = 0; b < k; ++b) {
      if (seen[b]) continue;
      std::size_t len = 0;
      for (Index y = static_cast<Index>(b); !seen[y]; y = p.conj(x, y)) {
        seen[y] = 1;
        ++len;
      }
      s.cycle_type.push_back(len);
    }
    std::sort(s.cycle_type.begin(), s.cycle_type.end());
    for (std::size_t r = 1; r <= n; ++r) {
      if (p.power(static_cast<std::int64_t>(r), x) == p.unit()) {
        s.power_order = r;
        break;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Index y = p.tau(r, x);
      s.power_orbit_sizes.push_back(classes[label[y]].size());
      s.power_fixed.push_back(y == x);
      fp.power_orbits[a].push_back(label[y]);
    }
    if (x != p.unit() && p.tau(pi2_row, x) == p.unit()) ++fp.involutions;
  }
  fp.sorted_signatures = fp.elements;
  std::sort(fp.sorted_signatures.begin(), fp.sorted_signatures.end());
  return fp;
}

namespace {

std::size_t lcm_size(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

// Partial map P -> Q defined on the power subquandle generated by a prefix of
// generators. Closure adds a|>b, b|>a and every pi^n image of newly mapped elements.
struct PartialPqMap {
  const PowerQuandle& p;
  const PowerQuandle& q;
  std::size_t period;
  bool injective;
  std::vector<Index> phi;
  std::vector<Index> domain;
  std::vector<char> used;

  PartialPqMap(const PowerQuandle& p_, const PowerQuandle& q_, bool inj)
      : p(p_), q(q_), period(lcm_size(p_.exponent(), q_.exponent())), injective(inj),
        phi(p_.size(), kNone), used(inj ? q_.size() : 0, 0) {}

  bool assign(Index x, Index v) {
    if (phi[x] != kNone) return phi[x] == v;
    if (injective) {
      if (used[v]) return false;
      used[v] = 1;
    }
    phi[x] = v;
    domain.push_back(x);
    return true;
  }

  // Maps a -> v and closes; restores the previous state on conflict.
  bool extend(Index a, Index v) {
    const std::size_t old_size = domain.size();
    bool ok = assign(a, v);
    for (std::size_t i = old_size; i < domain.size() && ok; ++i) {
      const Index x = domain[i];
      const Index fx = phi[x];
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const Index y = domain[j];
        const Index fy = phi[y];
        ok = assign(p.conj(x, y), q.conj(fx, fy)) && assign(p.conj(y, x), q.conj(fy, fx));
      }
      for (std::size_t r = 0; r < period && ok; ++r) {
        ok = assign(p.tau(r % p.exponent(), x), q.tau(r % q.exponent(), fx));
      }
    }
    if (!ok) truncate(old_size);
    return ok;
  }

  void truncate(std::size_t size) {
    for (std::size_t i = size; i < domain.size(); ++i) {
      if (injective) used[phi[domain[i]]] = 0;
      phi[domain[i]] = kNone;
    }
    domain.resize(size);
  }
};

// Greedy generating sequence: smallest element outside the closure so far.
std::vector<Index> pq_generators(const PowerQuandle& p) {
  PartialPqMap self(p, p, false);
  self.extend(p.unit(), p.unit());
  std::vector<Index> gens;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (self.phi[a] != kNone) continue;
    gens.push_back(static_cast<Index>(a));
    self.extend(static_cast<Index>(a), static_cast<Index>(a));
  }
  return gens;
}

}  // namespace

bool is_pq_morphism(const PowerQuandle& p, const PowerQuandle& q, std::span<const Index> image) {
  if (image.size() != p.size()) return false;
  for (Index x : image) {
    if (x >= q.size()) return false;
  }
  if (image[p.unit()] != q.unit()) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (image[p.conj(static_cast<Index>(a), static_cast<Index>(b))] != q.conj(image[a], image[b])) return false;
    }
  }
  const std::size_t period = lcm_size(p.exponent(), q.exponent());
  for (std::size_t r = 0; r < period; ++r) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (image[p.tau(r % p.exponent(), static_cast<Index>(a))] != q.tau(r % q.exponent(), image[a])) return false;
    }
  }
  return true;
}

namespace {

bool iso_search(PartialPqMap& m, const std::vector<Index>& gens, std::size_t level,
                const PqFingerprint& fp, const PqFingerprint& fq) {
  if (level == gens.size()) return m.domain.size() == m.p.size();
  const Index a = gens[level];
  const std::size_t before = m.domain.size();
  for (std::size_t c = 0; c < m.q.size(); ++c) {
    const auto cand = static_cast<Index>(c);
    if (m.used[cand] || fq.elements[cand] != fp.elements[a]) continue;
    if (!m.extend(a, cand)) continue;
    if (iso_search(m, gens, level + 1, fp, fq)) return true;
    m.truncate(before);
  }
  return false;
}

std::uint64_t morphism_count(PartialPqMap& m, const std::vector<Index>& gens, std::size_t level) {
  if (level == gens.size()) return 1;
  const std::size_t before = m.domain.size();
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < m.q.size(); ++c) {
    if (!m.extend(gens[level], static_cast<Index>(c))) continue;
    total += morphism_count(m, gens, level + 1);
    m.truncate(before);
  }
  return total;
}

}  // namespace

std::optional<std::vector<Index>> pq_iso(const PowerQuandle& p_in, const PowerQuandle& q_in) {
  const PowerQuandle p = canonical_exponent(p_in);
  const PowerQuandle q = canonical_exponent(q_in);
  if (p.size() != q.size() || p.exponent() != q.exponent()) return std::nullopt;
  const PqFingerprint fp = fingerprint(p);
  const PqFingerprint fq = fingerprint(q);
  if (!fp.same_invariants(fq)) return std::nullopt;
  PartialPqMap m(p, q, true);
  if (!m.extend(p.unit(), q.unit())) return std::nullopt;
  const std::vector<Index> gens = pq_generators(p);
  if (!iso_search(m, gens, 0, fp, fq)) return std::nullopt;
  return std::move(m.phi);
}

std::uint64_t count_pq_morphisms(const PowerQuandle& p_in, const PowerQuandle& q_in) {
  const PowerQuandle p = canonical_exponent(p_in);
  const PowerQuandle q = canonical_exponent(q_in);
  PartialPqMap m(p, q, false);
  if (!m.extend(p.unit(), q.unit())) return 0;
  return morphism_count(m, pq_generators(p), 0);
}

AbelianPresentation pq_abelianization(const PowerQuandle& p) {
  OrbitPq o = orbits(p);
  AbelianPresentation ab;
  ab.rank = o.classes.size();
  ab.exponent = p.exponent();
  const auto m = static_cast<Eigen::Index>(ab.rank);
  for (std::size_t r = 0; r < p.exponent(); ++r) {
    IntMatrix action = IntMatrix::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) action(o.quotient.tau(r, static_cast<Index>(j)), j) = BigInt(1);
    ab.action.push_back(std::move(action));
  }
  ab.orbits = std::move(o.classes);
  return ab;
}

}  // namespace powq
