#include "powq/extension.hpp"

#include <limits>
#include <numeric>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/power_quandle.hpp"

namespace powq {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

Subgroup fiber_of_identity(const FiniteGroup& total, std::span<const Index> proj) {
  std::vector<Index> members;
  for (std::size_t x = 0; x < proj.size(); ++x) {
    if (proj[x] == 0) members.push_back(static_cast<Index>(x));
  }
  return Subgroup{total, std::move(members)};
}

// First (z, s) with z in the kernel and s a generator of E that do not commute.
std::optional<std::pair<Index, Index>> non_central_witness(const Subgroup& kernel) {
  const FiniteGroup& e = kernel.parent;
  for (Index z : kernel.members) {
    for (Index s : e.generators()) {
      if (e.mul(z, s) != e.mul(s, z)) return std::make_pair(z, s);
    }
  }
  return std::nullopt;
}

void check_section(const FiniteGroup& base, std::span<const Index> proj, std::span<const Index> section) {
  if (section.size() != base.order()) throw Error("section has the wrong length");
  if (section[0] != 0) throw Error("section does not send the identity to the identity");
  for (std::size_t g = 0; g < section.size(); ++g) {
    if (section[g] >= proj.size() || proj[section[g]] != g) {
      throw Error("proj(section(" + std::to_string(g) + ")) != " + std::to_string(g));
    }
  }
}

}  // namespace

CentralExtension make_extension(const FiniteGroup& total, const FiniteGroup& base,
                                std::vector<Index> proj, std::vector<Index> section) {
  if (proj.size() != total.order()) throw Error("projection has the wrong length");
  if (!is_hom(total, base, proj)) throw Error("projection is not a homomorphism");
  check_section(base, proj, section);
  Subgroup kernel = fiber_of_identity(total, proj);
  if (auto w = non_central_witness(kernel)) {
    throw KernelNotCentral("kernel element " + std::to_string(w->first) + " does not commute with " +
                           std::to_string(w->second));
  }
  return CentralExtension{total, GroupHom{total, base, std::move(proj)}, std::move(kernel), std::move(section)};
}

CentralExtension gr_pq(const FiniteGroup& g, std::size_t limit) {
  EnumeratedGroup en = todd_coxeter(presentation_of_pq(pq_of_group(g)), limit);
  const FiniteGroup& e = en.group;
  std::vector<Index> ident(g.order());
  std::iota(ident.begin(), ident.end(), Index{0});
  std::vector<Index> proj(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) proj[x] = evaluate_word(g, ident, en.rep_words[x]);

  if (!is_hom(e, g, proj)) throw Error("eps is not a homomorphism");
  check_section(g, proj, en.gen_images);  // also gives surjectivity
  Subgroup kernel = fiber_of_identity(e, proj);
  if (auto w = non_central_witness(kernel)) {
    throw CentralityFailure("A(G) is not central: " + std::to_string(w->first) + " and generator " +
                            std::to_string(w->second) + " do not commute");
  }
  return CentralExtension{e, GroupHom{e, g, std::move(proj)}, std::move(kernel), std::move(en.gen_images)};
}

bool FiveTermReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

FiveTermReport verify_five_term(const FiniteGroup& g, const CentralExtension& ext, std::size_t h2_bound) {
  FiveTermReport r;
  const FiniteGroup& e = ext.total;
  const Subgroup comm = commutator_subgroup(e);
  r.e_order = e.order();
  r.a_order = ext.kernel.order();
  r.a_cap_commutator = intersect(ext.kernel, comm).order();
  r.ab_e = abelian_quotient_invariants(e, comm);
  r.b = b_group(g);
  r.h1 = abelian_invariants(g);
  r.coker = abelian_quotient_invariants(e, join(ext.kernel, comm));

  r.checks.push_back({"ab_e_is_b", r.ab_e == r.b, false, "Ab(E) = " + r.ab_e.to_string() + ", B(G) = " + r.b.to_string()});
  r.checks.push_back({"coker_is_h1", r.coker == r.h1, false,
                      "E/(A[E,E]) = " + r.coker.to_string() + ", H1 = " + r.h1.to_string()});
  const bool finite = r.b.is_finite() && r.h1.is_finite();
  const bool exact = finite && static_cast<std::uint64_t>(r.a_order) * r.h1.torsion_order() ==
                                   static_cast<std::uint64_t>(r.a_cap_commutator) * r.b.torsion_order();
  r.checks.push_back({"exact_at_a", exact, false,
                      "|A| = " + std::to_string(r.a_order) + ", |A n [E,E]| = " + std::to_string(r.a_cap_commutator) +
                          ", |B| = " + std::to_string(r.b.torsion_order()) +
                          ", |H1| = " + std::to_string(r.h1.torsion_order())});
  if (g.order() <= h2_bound) {
    r.h2 = bar_homology(g, 2, h2_bound);
    const bool divides = r.h2->is_finite() && r.h2->torsion_order() % r.a_cap_commutator == 0;
    r.checks.push_back({"schur_image", divides, false,
                        "|A n [E,E]| = " + std::to_string(r.a_cap_commutator) + ", H2 = " + r.h2->to_string()});
  } else {
    r.checks.push_back({"schur_image", true, true, "|G| above the bar homology bound"});
  }
  return r;
}

GroupHom extend_section(const CentralExtension& universal, const CentralExtension& target,
                        std::span<const Index> s) {
  const FiniteGroup& g = universal.base();
  const FiniteGroup& u = universal.total;
  const FiniteGroup& t = target.total;
  if (target.base().order() != g.order()) throw Error("extensions have different base groups");
  check_section(g, target.proj.image, s);
  if (auto w = non_central_witness(target.kernel)) {
    throw KernelNotCentral("kernel element " + std::to_string(w->first) + " does not commute with " +
                           std::to_string(w->second));
  }

  const std::size_t k = g.order();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto x = static_cast<Index>(a), y = static_cast<Index>(b);
      if (s[g.conj(x, y)] != t.conj(s[x], s[y])) {
        throw SectionNotPqMorphism("s(" + std::to_string(a) + " |> " + std::to_string(b) +
                                   ") != s(a) |> s(b)");
      }
    }
  }
  const std::uint64_t n = exponent(g);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::uint64_t r = 0; r <= n; ++r) {
      const auto x = static_cast<Index>(a);
      const auto rr = static_cast<std::int64_t>(r);
      if (s[g.pow(x, rr)] != t.pow(s[x], rr)) {
        throw SectionNotPqMorphism("s(" + std::to_string(a) + "^" + std::to_string(r) + ") != s(a)^" +
                                   std::to_string(r));
      }
    }
  }

  // sigma(a) generate Gr Pq(G); walk the Cayley graph and check every edge.
  std::vector<Index> phi(u.order(), kNone);
  std::vector<Index> queue{0};
  phi[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t a = 0; a < k; ++a) {
      const Index y = u.mul(x, universal.section[a]);
      const Index v = t.mul(phi[x], s[a]);
      if (phi[y] == kNone) {
        phi[y] = v;
        queue.push_back(y);
      } else if (phi[y] != v) {
        throw Error("sigma -> s does not extend to a homomorphism");
      }
    }
  }
  if (queue.size() != u.order()) throw Error("section of the universal extension does not generate it");
  for (std::size_t x = 0; x < u.order(); ++x) {
    if (target.proj.image[phi[x]] != universal.proj.image[x]) {
      throw Error("extended section does not commute with the projections");
    }
  }
  return GroupHom{u, t, std::move(phi)};
}

namespace {

// Partial hom G -> E on the subgroup generated by a prefix of `gens`.
struct SectionSearch {
  const FiniteGroup& g;
  const FiniteGroup& e;
  std::vector<Index> gens;
  std::vector<std::vector<Index>> candidates;
  std::vector<Index> images;
  std::vector<Index> phi;
  std::vector<Index> domain{0};

  bool push(Index target) {
    const std::size_t level = images.size();
    images.push_back(target);
    const std::size_t old_size = domain.size();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const Index x = domain[i];
      for (std::size_t j = i < old_size ? level : 0; j <= level; ++j) {
        const Index y = g.mul(x, gens[j]);
        const Index v = e.mul(phi[x], images[j]);
        if (phi[y] == kNone) {
          phi[y] = v;
          domain.push_back(y);
        } else if (phi[y] != v) {
          truncate(old_size);
          return false;
        }
      }
    }
    return true;
  }

  void truncate(std::size_t size) {
    for (std::size_t i = size; i < domain.size(); ++i) phi[domain[i]] = kNone;
    domain.resize(size);
    images.pop_back();
  }

  bool search() {
    const std::size_t level = images.size();
    if (level == gens.size()) return true;
    const std::size_t before = domain.size();
    for (Index c : candidates[level]) {
      if (!push(c)) continue;
      if (search()) return true;
      truncate(before);
    }
    return false;
  }
};

}  // namespace

std::optional<GroupHom> check_split(const CentralExtension& ext) {
  const FiniteGroup& g = ext.base();
  const FiniteGroup& e = ext.total;
  SectionSearch st{g, e, min_generating_sequence(g), {}, {}, std::vector<Index>(g.order(), kNone)};
  st.phi[0] = 0;
  for (Index s : st.gens) {
    std::vector<Index> fiber{ext.section[s]};
    for (std::size_t x = 0; x < e.order(); ++x) {
      const auto y = static_cast<Index>(x);
      if (ext.proj.image[x] == s && y != ext.section[s]) fiber.push_back(y);
    }
    std::erase_if(fiber, [&](Index y) { return e.element_order(y) != g.element_order(s); });
    st.candidates.push_back(std::move(fiber));
  }
  if (!st.search()) return std::nullopt;

  // (g, a) -> s(g) a must hit every element of E exactly once.
  std::vector<char> seen(e.order(), 0);
  std::size_t hits = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Index a : ext.kernel.members) {
      const Index y = e.mul(st.phi[x], a);
      if (!seen[y]) {
        seen[y] = 1;
        ++hits;
      }
    }
  }
  if (hits != e.order() || g.order() * ext.kernel.order() != e.order()) {
    throw Error("hom section found but (g, a) -> s(g)a is not a bijection");
  }
  if (e.order() <= kSplitIsoCheckLimit) {
    const FiniteGroup a = subgroup_as_group(ext.kernel).first;
    if (!group_iso(e, direct_product(g, a))) throw Error("hom section found but E is not G x A");
  }
  return GroupHom{g, e, std::move(st.phi)};
}

}  // namespace powq
