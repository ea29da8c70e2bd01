#include "powq/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "powq/error.hpp"

namespace powq {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Presentation presentation_of_pq(const PowerQuandle& p) {
  const std::size_t k = p.size(), n = p.exponent();
  auto letter = [](Index a) { return static_cast<int>(a) + 1; };
  std::vector<Word> raw;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto x = static_cast<Index>(a), y = static_cast<Index>(b);
      raw.push_back({letter(x), letter(y), -letter(x), -letter(p.conj(x, y))});
    }
  }
  for (std::size_t a = 0; a < k; ++a) raw.emplace_back(n, letter(static_cast<Index>(a)));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t r = 1; r < n; ++r) {
      Word w(r, letter(static_cast<Index>(a)));
      w.push_back(-letter(p.tau(r, static_cast<Index>(a))));
      raw.push_back(std::move(w));
    }
  }
  for (std::size_t a = 0; a < k; ++a) raw.push_back({letter(p.tau(0, static_cast<Index>(a)))});
  raw.push_back({letter(p.unit())});

  Presentation pres;
  pres.num_generators = k;
  std::set<Word> seen;
  for (const Word& w : raw) {
    Word r = free_reduce(w);
    if (r.empty() || !seen.insert(r).second) continue;
    pres.relators.push_back(std::move(r));
  }
  return pres;
}

namespace {

// Coset table over the trivial subgroup. Column 2g is generator g, column
// 2g+1 its inverse; -1 marks an undefined entry.
class CosetTable {
 public:
  CosetTable(std::size_t num_generators, std::size_t limit)
      : cols_(2 * num_generators), limit_(limit) {
    add_row();
  }

  std::size_t cols() const { return cols_; }
  std::size_t total() const { return parent_.size(); }
  std::size_t live() const { return live_; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  static std::size_t inverse_col(std::size_t x) { return x ^ 1U; }
  const EnumerationStats& stats() const { return stats_; }

  void define(std::size_t c, std::size_t x) {
    if (live_ >= limit_) {
      throw LimitExceeded(limit_, "coset enumeration exceeded " + std::to_string(limit_) + " live cosets");
    }
    const auto d = static_cast<std::int32_t>(add_row());
    at(c, x) = d;
    at(static_cast<std::size_t>(d), inverse_col(x)) = static_cast<std::int32_t>(c);
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    auto f = static_cast<std::int32_t>(alpha), b = f;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_col(w[j])) >= 0) b = at(b, inverse_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_col(w[i])) = f;
        return;
      }
      define(static_cast<std::size_t>(f), w[i]);
    }
  }

  // Renumbers live cosets 0..live-1 in their current order; returns the new
  // index of the first live coset at or after `cursor`.
  std::size_t compact(std::size_t cursor) {
    std::vector<std::int32_t> renum(total(), -1);
    std::size_t next = 0, new_cursor = 0;
    for (std::size_t c = 0; c < total(); ++c) {
      if (c == cursor) new_cursor = next;
      if (alive(c)) renum[c] = static_cast<std::int32_t>(next++);
    }
    if (cursor >= total()) new_cursor = next;
    std::vector<std::int32_t> fresh(next * cols_);
    for (std::size_t c = 0; c < total(); ++c) {
      if (renum[c] < 0) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = at(c, x);
        fresh[static_cast<std::size_t>(renum[c]) * cols_ + x] = d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = static_cast<std::int32_t>(c);
    return new_cursor;
  }

 private:
  std::size_t add_row() {
    const std::size_t c = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(c));
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    ++stats_.cosets_defined;
    stats_.max_live = std::max(stats_.max_live, live_);
    return c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t>& queue) {
    const std::int32_t phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const std::int32_t mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    queue.push_back(nu);
    --live_;
    ++stats_.coincidences;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::int32_t gamma = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, inverse_col(x)) = -1;
        const std::int32_t mu = rep(gamma), nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inverse_col(x)) >= 0) {
          merge(mu, at(nu, inverse_col(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inverse_col(x)) = mu;
        }
      }
    }
  }

  std::int32_t& at(std::int32_t c, std::size_t x) { return at(static_cast<std::size_t>(c), x); }

  std::size_t cols_;
  std::size_t limit_;
  std::size_t live_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  EnumerationStats stats_;
};

std::size_t column_of(int letter) {
  const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
  return 2 * g + (letter < 0 ? 1 : 0);
}

// Cyclic reduction: a relator and its cyclic conjugates have the same normal closure.
Word cyclically_reduce(Word w) {
  w = free_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
}

}  // namespace

EnumeratedGroup todd_coxeter(const Presentation& pres, std::size_t limit) {
  const std::size_t m = pres.num_generators;
  for (const Word& w : pres.relators) {
    for (int x : w) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > m) throw Error("relator letter out of range");
    }
  }
  if (m == 0) {
    EnumeratedGroup out{FiniteGroup(), {}, {Word{}}, {1, 1, 0}};
    return out;
  }

  std::vector<std::vector<std::size_t>> relators;
  for (const Word& w : pres.relators) {
    Word r = cyclically_reduce(w);
    if (r.empty()) continue;
    std::vector<std::size_t> cols;
    for (int x : r) cols.push_back(column_of(x));
    relators.push_back(std::move(cols));
  }

  CosetTable t(m, limit);
  std::size_t alpha = 0;
  while (alpha < t.total()) {
    if (t.total() > 4096 && t.total() - t.live() > t.live()) alpha = t.compact(alpha);
    if (alpha >= t.total()) break;
    if (t.alive(alpha)) {
      for (const auto& w : relators) {
        t.scan_and_fill(alpha, w);
        if (!t.alive(alpha)) break;
      }
      if (t.alive(alpha)) {
        for (std::size_t x = 0; x < t.cols(); ++x) {
          if (t.at(alpha, x) < 0) t.define(alpha, x);
        }
      }
    }
    ++alpha;
  }
  t.compact(0);
  const std::size_t n = t.total();

  // Breadth-first renumbering over the positive generators.
  std::vector<std::int32_t> order_of(n, -1);
  std::vector<std::size_t> bfs{0};
  std::vector<Word> words{Word{}};
  order_of[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t g = 0; g < m; ++g) {
      const auto y = static_cast<std::size_t>(t.at(bfs[i], 2 * g));
      if (order_of[y] >= 0) continue;
      order_of[y] = static_cast<std::int32_t>(bfs.size());
      bfs.push_back(y);
      Word w = words[i];
      w.push_back(static_cast<int>(g) + 1);
      words.push_back(std::move(w));
    }
  }
  if (bfs.size() != n) throw Error("coset table is not connected after enumeration");

  std::vector<Index> right(m * n), right_inv(m * n);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = bfs[i];
      right[g * n + i] = static_cast<Index>(order_of[static_cast<std::size_t>(t.at(c, 2 * g))]);
      right_inv[g * n + i] = static_cast<Index>(order_of[static_cast<std::size_t>(t.at(c, 2 * g + 1))]);
    }
  }

  // Closed table: every relator must trace back to its start from every coset.
  for (const auto& w : relators) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t c = i;
      for (std::size_t col : w) {
        const std::size_t g = col / 2;
        c = (col % 2 == 0) ? right[g * n + c] : right_inv[g * n + c];
      }
      if (c != i) throw Error("relator does not close at coset " + std::to_string(i));
    }
  }

  EnumeratedGroup out;
  out.stats = t.stats();
  out.gen_images.resize(m);
  for (std::size_t g = 0; g < m; ++g) out.gen_images[g] = right[g * n];
  out.group = FiniteGroup::from_right_action(n, m, std::move(right), std::move(right_inv));
  out.rep_words = std::move(words);
  return out;
}

Index evaluate_word(const FiniteGroup& g, std::span<const Index> images, const Word& w) {
  Index x = 0;
  for (int letter : w) {
    const Index s = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    x = g.mul(x, letter > 0 ? s : g.inv(s));
  }
  return x;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  for (const Word& w : p.relators) {
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace powq
