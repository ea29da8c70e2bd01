#include "powq/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "powq/error.hpp"

namespace powq {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Closure of {0} under right multiplication by gens, as a membership bitmap
// plus the list of members in discovery order.
void close_under(const FiniteGroup& g, std::span<const Index> gens, std::vector<char>& in,
                 std::vector<Index>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Index x = list[i];
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  }
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members)};
}

// Greedily picks elements of `candidates` that enlarge the generated subgroup.
Subgroup generated_greedy(const FiniteGroup& g, std::span<const Index> candidates) {
  std::vector<char> in(g.order(), 0);
  std::vector<Index> list{0};
  in[0] = 1;
  std::vector<Index> gens;
  for (Index c : candidates) {
    if (in[c]) continue;
    gens.push_back(c);
    // New elements arise from old members times the new generator; rerun the
    // closure from the start so every member sees every generator.
    std::fill(in.begin(), in.end(), 0);
    list.assign(1, 0);
    in[0] = 1;
    close_under(g, gens, in, list);
  }
  return make_subgroup(g, std::move(list));
}

}  // namespace

struct FiniteGroup::Storage {
  std::size_t k = 1;
  std::vector<Index> table;
  std::vector<std::string> names;
  std::vector<Index> inverse;
  std::vector<std::uint64_t> orders;
  std::vector<Index> gens;

  // Right regular action mode.
  std::size_t num_gens = 0;
  std::vector<Index> right;
  std::vector<Index> right_inv;
  std::vector<std::uint32_t> word_start;
  std::vector<Index> word_letters;

  Index mul(Index a, Index b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * k + b];
    Index x = a;
    for (std::uint32_t i = word_start[b]; i < word_start[b + 1]; ++i) {
      x = right[static_cast<std::size_t>(word_letters[i]) * k + x];
    }
    return x;
  }
};

FiniteGroup::FiniteGroup() {
  auto s = std::make_shared<Storage>();
  s->k = 1;
  s->table = {0};
  s->inverse = {0};
  s->orders = {1};
  s_ = std::move(s);
}

FiniteGroup::FiniteGroup(std::shared_ptr<const Storage> s) : s_(std::move(s)) {}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Index> mul,
                                            std::vector<std::string> names) {
  auto s = std::make_shared<Storage>();
  s->k = order;
  s->table = std::move(mul);
  s->names = std::move(names);
  const std::size_t k = order;
  s->inverse.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (s->table[a * k + b] == 0) {
        s->inverse[a] = static_cast<Index>(b);
        break;
      }
    }
  }
  s->orders.assign(k, 1);
  for (std::size_t a = 0; a < k; ++a) {
    Index x = static_cast<Index>(a);
    std::uint64_t n = 1;
    while (x != 0) {
      x = s->table[x * k + a];
      ++n;
    }
    s->orders[a] = n;
  }
  FiniteGroup tmp(s);
  s->gens = min_generating_sequence(tmp);
  return FiniteGroup(std::move(s));
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Index> mul,
                                    std::vector<std::string> names) {
  using Kind = GroupError::Kind;
  const std::size_t k = order;
  if (k == 0) throw GroupError(Kind::BadTable, {}, "group order must be positive");
  if (mul.size() != k * k) {
    throw GroupError(Kind::BadTable, {}, "table has " + std::to_string(mul.size()) +
                                             " entries, expected " + std::to_string(k * k));
  }
  if (!names.empty() && names.size() != k) {
    throw GroupError(Kind::BadTable, {}, "names must be empty or one per element");
  }
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i] >= k) {
      throw GroupError(Kind::BadTable, {i / k, i % k},
                       "entry (" + std::to_string(i / k) + "," + std::to_string(i % k) +
                           ") out of range");
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (mul[a] != a || mul[a * k] != a) {
      throw GroupError(Kind::NoIdentity, {a},
                       "index 0 is not an identity: fails at element " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t ab = mul[a * k + b];
      for (std::size_t c = 0; c < k; ++c) {
        if (mul[ab * k + c] != mul[a * k + mul[b * k + c]]) {
          throw GroupError(Kind::NotAssociative, {a, b, c},
                           "(ab)c != a(bc) for (a,b,c) = (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < k && !found; ++b) {
      found = mul[a * k + b] == 0 && mul[b * k + a] == 0;
    }
    if (!found) {
      throw GroupError(Kind::NoInverse, {a}, "element " + std::to_string(a) + " has no inverse");
    }
  }
  return from_trusted_table(order, std::move(mul), std::move(names));
}

FiniteGroup FiniteGroup::from_right_action(std::size_t order, std::size_t num_gens,
                                           std::vector<Index> right,
                                           std::vector<Index> right_inv) {
  auto s = std::make_shared<Storage>();
  const std::size_t k = order;
  s->k = k;
  s->num_gens = num_gens;
  s->right = std::move(right);
  s->right_inv = std::move(right_inv);

  // Breadth-first spanning tree from the identity gives one word per element.
  std::vector<Index> parent(k, kNone), letter(k, kNone), bfs{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const Index x = bfs[i];
    for (std::size_t gi = 0; gi < num_gens; ++gi) {
      const Index y = s->right[gi * k + x];
      if (parent[y] == kNone) {
        parent[y] = x;
        letter[y] = static_cast<Index>(gi);
        bfs.push_back(y);
      }
    }
  }
  if (bfs.size() != k) throw Error("right action is not transitive");
  std::vector<std::uint32_t> depth(k, 0);
  for (std::size_t i = 1; i < bfs.size(); ++i) depth[bfs[i]] = depth[parent[bfs[i]]] + 1;
  s->word_start.assign(k + 1, 0);
  for (std::size_t x = 0; x < k; ++x) s->word_start[x + 1] = s->word_start[x] + depth[x];
  s->word_letters.assign(s->word_start[k], 0);
  for (std::size_t x = 1; x < k; ++x) {
    Index y = static_cast<Index>(x);
    for (std::uint32_t pos = s->word_start[x + 1]; pos > s->word_start[x]; --pos) {
      s->word_letters[pos - 1] = letter[y];
      y = parent[y];
    }
  }

  // Inverse of g_1...g_m is traced by g_m^-1 ... g_1^-1 from the identity.
  s->inverse.assign(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    Index y = 0;
    for (std::uint32_t pos = s->word_start[x + 1]; pos > s->word_start[x]; --pos) {
      y = s->right_inv[static_cast<std::size_t>(s->word_letters[pos - 1]) * k + y];
    }
    s->inverse[x] = y;
  }

  if (k <= kTableLimit) {
    std::vector<Index> table(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) table[a * k + b] = s->mul(static_cast<Index>(a), static_cast<Index>(b));
    }
    s->table = std::move(table);
  }

  s->orders.assign(k, 1);
  for (std::size_t a = 1; a < k; ++a) {
    Index x = static_cast<Index>(a);
    std::uint64_t n = 1;
    while (x != 0) {
      x = s->mul(x, static_cast<Index>(a));
      ++n;
    }
    s->orders[a] = n;
  }

  std::vector<char> seen(k, 0);
  for (std::size_t gi = 0; gi < num_gens; ++gi) {
    const Index x = s->right[gi * k];
    if (x != 0 && !seen[x]) {
      seen[x] = 1;
      s->gens.push_back(x);
    }
  }
  return FiniteGroup(std::move(s));
}

std::size_t FiniteGroup::order() const noexcept { return s_->k; }
bool FiniteGroup::has_table() const noexcept { return !s_->table.empty(); }
std::span<const Index> FiniteGroup::table() const noexcept { return s_->table; }
const std::vector<std::string>& FiniteGroup::names() const noexcept { return s_->names; }
Index FiniteGroup::mul(Index a, Index b) const { return s_->mul(a, b); }
Index FiniteGroup::inv(Index a) const { return s_->inverse[a]; }
std::uint64_t FiniteGroup::element_order(Index a) const { return s_->orders[a]; }
std::span<const Index> FiniteGroup::generators() const noexcept { return s_->gens; }

Index FiniteGroup::pow(Index a, std::int64_t n) const {
  const auto ord = static_cast<std::int64_t>(element_order(a));
  std::int64_t r = n % ord;
  if (r < 0) r += ord;
  Index result = 0;
  Index base = a;
  while (r > 0) {
    if (r & 1) result = mul(result, base);
    base = mul(base, base);
    r >>= 1;
  }
  return result;
}

bool Subgroup::contains(Index a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

std::uint64_t AbelianInvariants::torsion_order() const noexcept {
  std::uint64_t n = 1;
  for (auto d : factors) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << ']';
  if (free_rank > 0) os << "+Z^" << free_rank;
  return os.str();
}

FiniteGroup validate_group(std::size_t order, std::vector<Index> mul,
                           std::vector<std::string> names) {
  return FiniteGroup::from_table(order, std::move(mul), std::move(names));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Index> list{0};
  in[0] = 1;
  close_under(g, gens, in, list);
  return make_subgroup(g, std::move(list));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup{g, std::move(all)};
}

std::vector<Index> min_generating_sequence(const FiniteGroup& g) {
  const std::size_t k = g.order();
  std::vector<char> in(k, 0);
  std::vector<Index> list{0};
  in[0] = 1;
  std::vector<Index> gens;
  for (std::size_t a = 1; a < k && list.size() < k; ++a) {
    if (in[a]) continue;
    gens.push_back(static_cast<Index>(a));
    std::fill(in.begin(), in.end(), 0);
    list.assign(1, 0);
    in[0] = 1;
    close_under(g, gens, in, list);
  }
  return gens;
}

bool is_normal(const Subgroup& n) {
  const FiniteGroup& g = n.parent;
  for (Index s : g.generators()) {
    for (Index x : n.members) {
      if (!n.contains(g.conj(s, x))) return false;
    }
  }
  return true;
}

std::pair<FiniteGroup, GroupHom> subgroup_as_group(const Subgroup& h) {
  const std::size_t m = h.order();
  if (m > 4 * FiniteGroup::kTableLimit) {
    throw SizeBound("subgroup of order " + std::to_string(m) + " too large to tabulate");
  }
  const FiniteGroup& g = h.parent;
  std::vector<Index> local(g.order(), kNone);
  for (std::size_t i = 0; i < m; ++i) local[h.members[i]] = static_cast<Index>(i);
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(h.members[i], h.members[j])];
  }
  FiniteGroup sub = FiniteGroup::from_trusted_table(m, std::move(table));
  GroupHom emb{sub, g, h.members};
  return {std::move(sub), std::move(emb)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> candidates = a.members;
  candidates.insert(candidates.end(), b.members.begin(), b.members.end());
  return generated_greedy(a.parent, candidates);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Index> members;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto x = static_cast<Index>(a);
    bool central = true;
    for (Index s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return Subgroup{g, std::move(members)};
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t k = g.order();
  std::vector<char> seen(k, 0);
  std::vector<std::vector<Index>> classes;
  for (std::size_t a = 0; a < k; ++a) {
    if (seen[a]) continue;
    std::vector<Index> orbit{static_cast<Index>(a)};
    seen[a] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Index s : g.generators()) {
        const Index y = g.conj(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n) {
  for (Index s : g.generators()) {
    for (Index x : n.members) {
      const Index c = g.conj(s, x);
      if (!n.contains(c)) {
        throw NotNormal({s, x, c}, "subgroup is not normal: " + std::to_string(s) + " conjugates " +
                                       std::to_string(x) + " to " + std::to_string(c));
      }
    }
  }
  const std::size_t k = g.order();
  const std::size_t q = k / n.order();
  if (q > 4 * FiniteGroup::kTableLimit) {
    throw SizeBound("quotient of order " + std::to_string(q) + " too large to tabulate");
  }
  std::vector<Index> coset(k, kNone), reps;
  for (std::size_t a = 0; a < k; ++a) {
    if (coset[a] != kNone) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(static_cast<Index>(a));
    for (Index x : n.members) coset[g.mul(static_cast<Index>(a), x)] = id;
  }
  std::vector<Index> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  }
  FiniteGroup quot = FiniteGroup::from_trusted_table(q, std::move(table));
  GroupHom proj{g, quot, std::move(coset)};
  return {std::move(quot), std::move(proj)};
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  const auto gens = g.generators();
  std::vector<Index> normal_gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Index c = g.commutator(gens[i], gens[j]);
      if (c != 0) normal_gens.push_back(c);
    }
  }
  Subgroup n = generated_greedy(g, normal_gens);
  // Normal closure: add conjugates of the generating set until stable.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = normal_gens.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (Index s : gens) {
        const Index c = g.conj(s, normal_gens[i]);
        if (!n.contains(c)) {
          normal_gens.push_back(c);
          n = generated_greedy(g, normal_gens);
          grew = true;
        }
      }
    }
  }
  return n;
}

AbelianInvariants abelian_quotient_invariants(const FiniteGroup& g, const Subgroup& n) {
  const std::size_t k = g.order();
  const std::uint64_t q = k / n.order();
  // Order of each coset xN is the least m with x^m in N.
  std::vector<std::uint64_t> coset_order(k, 1);
  std::uint64_t exp = 1;
  for (std::size_t a = 0; a < k; ++a) {
    Index x = static_cast<Index>(a);
    std::uint64_t m = 1;
    while (!n.contains(x)) {
      x = g.mul(x, static_cast<Index>(a));
      ++m;
    }
    coset_order[a] = m;
    exp = lcm64(exp, m);
  }
  PowerFingerprint fp;
  for (auto d : divisors(exp)) {
    std::uint64_t count = 0;
    for (auto m : coset_order) count += (d % m == 0) ? 1 : 0;
    fp[d] = count / n.order();
  }
  return abelian_from_fingerprint(fp, q);
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  return abelian_quotient_invariants(g, commutator_subgroup(g));
}

std::pair<AbelianInvariants, GroupHom> abelianization(const FiniteGroup& g) {
  Subgroup n = commutator_subgroup(g);
  auto inv = abelian_quotient_invariants(g, n);
  auto [quot, proj] = quotient(g, n);
  return {std::move(inv), std::move(proj)};
}

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (std::size_t a = 0; a < g.order(); ++a) e = lcm64(e, g.element_order(static_cast<Index>(a)));
  return e;
}

PowerFingerprint power_fingerprint(const FiniteGroup& g) {
  PowerFingerprint fp;
  for (auto d : divisors(exponent(g))) {
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < g.order(); ++a) {
      count += (d % g.element_order(static_cast<Index>(a)) == 0) ? 1 : 0;
    }
    fp[d] = count;
  }
  return fp;
}

std::vector<std::uint64_t> order_profile(const FiniteGroup& g) {
  std::vector<std::uint64_t> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) out[a] = g.element_order(static_cast<Index>(a));
  std::sort(out.begin(), out.end());
  return out;
}

AbelianInvariants abelian_from_fingerprint(const PowerFingerprint& fp, std::uint64_t order) {
  auto count_at = [&](std::uint64_t n) -> std::uint64_t {
    auto it = fp.find(n);
    if (it == fp.end()) throw Unrealizable("fingerprint has no entry for n = " + std::to_string(n));
    return it->second;
  };
  if (order == 0) throw Unrealizable("order must be positive");
  if (fp.empty()) throw Unrealizable("empty fingerprint");
  const std::uint64_t exp = fp.rbegin()->first;
  if (count_at(1) != 1) throw Unrealizable("exactly one element satisfies a^1 = e");

  // Per prime p: log_p |{a : a^(p^j) = e}| grows by #{cyclic p-factors of order >= p^j}.
  std::vector<std::vector<std::uint64_t>> prime_powers;  // per prime, factor orders descending
  for (auto [p, a] : factorize(order)) {
    std::vector<unsigned> at_least;  // at_least[j-1] = #{factors with p-exponent >= j}
    unsigned prev_log = 0;
    std::uint64_t pj = 1;
    while (exp % (pj * p) == 0) {
      pj *= p;
      std::uint64_t c = count_at(pj);
      unsigned log = 0;
      while (c % p == 0) {
        c /= p;
        ++log;
      }
      if (c != 1 || log < prev_log) throw Unrealizable("count at " + std::to_string(pj) + " is not a growing power of " + std::to_string(p));
      if (!at_least.empty() && log - prev_log > at_least.back()) {
        throw Unrealizable("p-rank increases at " + std::to_string(pj));
      }
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    if (prev_log != a) throw Unrealizable("p-part of fingerprint does not match the order");
    std::vector<std::uint64_t> orders;
    const unsigned rank = at_least.empty() ? 0 : at_least.front();
    for (unsigned i = 0; i < rank; ++i) {
      std::uint64_t q = 1;
      for (unsigned j = 0; j < at_least.size(); ++j) {
        if (at_least[j] > i) q *= p;
      }
      orders.push_back(q);
    }
    prime_powers.push_back(std::move(orders));
  }

  std::size_t m = 0;
  for (const auto& v : prime_powers) m = std::max(m, v.size());
  AbelianInvariants inv;
  inv.factors.assign(m, 1);
  for (const auto& v : prime_powers) {
    // Largest p-part goes to the largest invariant factor.
    for (std::size_t i = 0; i < v.size(); ++i) inv.factors[m - 1 - i] *= v[i];
  }

  for (auto [n, c] : fp) {
    std::uint64_t expect = 1;
    for (auto d : inv.factors) expect *= std::gcd(n, d);
    if (expect != c) throw Unrealizable("fingerprint inconsistent at n = " + std::to_string(n));
  }
  if (inv.torsion_order() != order) throw Unrealizable("factor product differs from order");
  if (!inv.factors.empty() && inv.factors.back() != exp) {
    throw Unrealizable("fingerprint keys do not end at the exponent");
  }
  return inv;
}

bool is_hom(const FiniteGroup& source, const FiniteGroup& target, std::span<const Index> image) {
  if (image.size() != source.order() || image[0] != 0) return false;
  for (Index x : image) {
    if (x >= target.order()) return false;
  }
  for (std::size_t a = 0; a < source.order(); ++a) {
    for (Index s : source.generators()) {
      if (image[source.mul(static_cast<Index>(a), s)] != target.mul(image[a], image[s])) return false;
    }
  }
  return true;
}

namespace {

// Partial homomorphism defined on the subgroup generated by a prefix of `gens`.
struct PartialHom {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::span<const Index> gens;
  std::vector<Index> images;
  std::vector<Index> phi;
  std::vector<Index> domain;
  std::vector<char> used;  // image set, only maintained when injective
  bool injective;

  PartialHom(const FiniteGroup& g_, const FiniteGroup& h_, std::span<const Index> gens_, bool inj)
      : g(g_), h(h_), gens(gens_), phi(g_.order(), kNone), domain{0}, used(inj ? h_.order() : 0, 0),
        injective(inj) {
    phi[0] = 0;
    if (injective) used[0] = 1;
  }

  // Extends by images[level] = target; returns false (state unchanged) on conflict.
  bool push(Index target) {
    const std::size_t level = images.size();
    images.push_back(target);
    const std::size_t old_size = domain.size();
    bool ok = true;
    for (std::size_t i = 0; i < domain.size() && ok; ++i) {
      const Index x = domain[i];
      const std::size_t first = i < old_size ? level : 0;
      for (std::size_t j = first; j <= level; ++j) {
        const Index y = g.mul(x, gens[j]);
        const Index v = h.mul(phi[x], images[j]);
        if (phi[y] == kNone) {
          if (injective && used[v]) {
            ok = false;
            break;
          }
          phi[y] = v;
          if (injective) used[v] = 1;
          domain.push_back(y);
        } else if (phi[y] != v) {
          ok = false;
          break;
        }
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
    images.pop_back();
  }
};

bool iso_search(PartialHom& ph, std::vector<std::uint64_t> const& gen_orders) {
  const std::size_t level = ph.images.size();
  if (level == ph.gens.size()) return ph.domain.size() == ph.g.order();
  const std::size_t before = ph.domain.size();
  for (std::size_t c = 1; c < ph.h.order(); ++c) {
    const auto cand = static_cast<Index>(c);
    if (ph.used[cand] || ph.h.element_order(cand) != gen_orders[level]) continue;
    if (!ph.push(cand)) continue;
    if (iso_search(ph, gen_orders)) return true;
    ph.truncate(before);
  }
  return false;
}

std::uint64_t hom_count(PartialHom& ph, std::vector<std::uint64_t> const& gen_orders) {
  const std::size_t level = ph.images.size();
  if (level == ph.gens.size()) return 1;
  const std::size_t before = ph.domain.size();
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < ph.h.order(); ++c) {
    const auto cand = static_cast<Index>(c);
    if (gen_orders[level] % ph.h.element_order(cand) != 0) continue;
    if (!ph.push(cand)) continue;
    total += hom_count(ph, gen_orders);
    ph.truncate(before);
  }
  return total;
}

}  // namespace

std::optional<std::vector<Index>> group_iso(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  const std::vector<Index> gens = min_generating_sequence(g);
  std::vector<std::uint64_t> gen_orders;
  for (Index s : gens) gen_orders.push_back(g.element_order(s));
  PartialHom ph(g, h, gens, true);
  if (!iso_search(ph, gen_orders)) return std::nullopt;
  return std::move(ph.phi);
}

std::uint64_t count_group_homs(const FiniteGroup& g, const FiniteGroup& h) {
  const std::vector<Index> gens = min_generating_sequence(g);
  std::vector<std::uint64_t> gen_orders;
  for (Index s : gens) gen_orders.push_back(g.element_order(s));
  PartialHom ph(g, h, gens, false);
  return hom_count(ph, gen_orders);
}

}  // namespace powq
