#include <doctest.h>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/extension.hpp"

using namespace powq;

namespace {

FiniteGroup G(const std::string& s) { return catalog_from_string(s); }

std::vector<Index> identity_map(std::size_t n) {
  std::vector<Index> v(n);
  for (Index i = 0; i < n; ++i) v[i] = i;
  return v;
}

Index first_involution(const FiniteGroup& g) {
  for (Index a = 1; a < g.order(); ++a) {
    if (g.mul(a, a) == 0) return a;
  }
  return 0;
}

// G x C2 -> G with (g, c) at index 2g + c.
CentralExtension times_c2(const FiniteGroup& g, const std::vector<Index>& tag) {
  const FiniteGroup e = direct_product(g, G("cyclic(2)"));
  std::vector<Index> proj(e.order()), section(g.order());
  for (Index x = 0; x < e.order(); ++x) proj[x] = x / 2;
  for (Index a = 0; a < g.order(); ++a) section[a] = 2 * a + tag[a];
  return make_extension(e, g, proj, section);
}

}  // namespace

TEST_CASE("gr_pq kernels") {
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const FiniteGroup g = G("cyclic(" + std::to_string(n) + ")");
    const CentralExtension ext = gr_pq(g);
    CHECK(ext.kernel.order() == 1);
    CHECK(ext.total.order() == g.order());
  }
  const CentralExtension s3 = gr_pq(G("symmetric(3)"));
  CHECK(s3.kernel.order() == 1);
  const CentralExtension q8 = gr_pq(G("dicyclic(8)"));
  CHECK(q8.kernel.order() == 2);
  CHECK(q8.total.order() == 16);
  CHECK(q8.base().order() == 8);
}

TEST_CASE("gr_pq structure") {
  const FiniteGroup g = G("dihedral(8)");
  const CentralExtension ext = gr_pq(g);
  CHECK(is_hom(ext.total, g, ext.proj.image));
  REQUIRE(ext.section.size() == g.order());
  CHECK(ext.section[0] == 0);
  for (Index a = 0; a < g.order(); ++a) CHECK(ext.proj.image[ext.section[a]] == a);
  for (Index k : ext.kernel.members) {
    CHECK(ext.proj.image[k] == 0);
    for (Index x = 0; x < ext.total.order(); ++x) CHECK(ext.total.mul(k, x) == ext.total.mul(x, k));
  }
  CHECK_THROWS_AS(gr_pq(G("symmetric(4)"), 10), LimitExceeded);
}

TEST_CASE("verify_five_term") {
  for (const char* name : {"trivial", "klein", "symmetric(3)", "dicyclic(8)", "dihedral(8)", "alternating(4)"}) {
    CAPTURE(name);
    const FiniteGroup g = G(name);
    const FiveTermReport r = verify_five_term(g, gr_pq(g));
    CHECK(r.all_passed());
    CHECK(r.ab_e == r.b);
    CHECK(r.coker == r.h1);
    CHECK(r.h2.has_value());
    CHECK(r.checks.size() == 4);
  }
  const FiniteGroup klein = G("klein");
  CHECK(verify_five_term(klein, gr_pq(klein)).h2 == AbelianInvariants{{2}, 0});
  const FiniteGroup c17 = G("cyclic(17)");
  const FiveTermReport big = verify_five_term(c17, gr_pq(c17));
  CHECK_FALSE(big.h2.has_value());
  CHECK(big.all_passed());
  CHECK(big.checks.back().skipped);
}

TEST_CASE("five-term checks catch a wrong extension") {
  // S3 x C2 with the trivial section is not Gr Pq(S3): Ab(E) = [2,2] but B = [2].
  const FiniteGroup s3 = G("symmetric(3)");
  const FiveTermReport r = verify_five_term(s3, times_c2(s3, std::vector<Index>(6, 0)));
  CHECK(r.ab_e == AbelianInvariants{{2, 2}, 0});
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("make_extension rejects bad data") {
  const FiniteGroup s3 = G("symmetric(3)"), c2 = G("cyclic(2)");
  std::vector<Index> sign(6);
  for (Index a = 0; a < 6; ++a) sign[a] = s3.element_order(a) == 2 ? 1 : 0;
  CHECK_THROWS_AS(make_extension(s3, c2, sign, {0, first_involution(s3)}), KernelNotCentral);
  CHECK_THROWS_AS(make_extension(s3, c2, sign, {0, 0}), Error);
  CHECK_THROWS_AS(make_extension(s3, c2, std::vector<Index>(6, 0), {0, 0}), Error);
  std::vector<Index> not_hom = sign;
  not_hom[1] ^= 1;
  CHECK_THROWS_AS(make_extension(s3, c2, not_hom, {0, 1}), Error);
}

TEST_CASE("extend_section") {
  SUBCASE("onto G itself gives the co-unit") {
    const FiniteGroup g = G("symmetric(3)");
    const CentralExtension u = gr_pq(g);
    const CentralExtension id = make_extension(g, g, identity_map(6), identity_map(6));
    const GroupHom phi = extend_section(u, id, identity_map(6));
    CHECK(phi.image == u.proj.image);
  }
  SUBCASE("onto the universal extension gives the identity") {
    const FiniteGroup q8 = G("dicyclic(8)");
    const CentralExtension u = gr_pq(q8);
    CHECK(extend_section(u, u, u.section).image == identity_map(u.total.order()));
  }
  SUBCASE("different sections give different homs, each fixed by its section") {
    const FiniteGroup c4 = G("cyclic(4)");
    const CentralExtension u = gr_pq(c4);
    for (const std::vector<Index>& tag : {std::vector<Index>{0, 0, 0, 0}, std::vector<Index>{0, 1, 0, 1}}) {
      const CentralExtension t = times_c2(c4, tag);
      const GroupHom phi = extend_section(u, t, t.section);
      CHECK(is_hom(u.total, t.total, phi.image));
      for (Index a = 0; a < 4; ++a) {
        CHECK(phi.image[u.section[a]] == t.section[a]);
        CHECK(t.proj.image[phi.image[u.section[a]]] == u.proj.image[u.section[a]]);
      }
    }
  }
  SUBCASE("a section that breaks conjugation is rejected") {
    const FiniteGroup s3 = G("symmetric(3)");
    std::vector<Index> tag(6, 0);
    tag[first_involution(s3)] = 1;
    const CentralExtension t = times_c2(s3, tag);
    CHECK_THROWS_AS(extend_section(gr_pq(s3), t, t.section), SectionNotPqMorphism);
  }
  SUBCASE("a section that breaks powers is rejected") {
    // s(a) = (a, 1) for a generator a of C3 gives s(a)^3 != s(a^3).
    const FiniteGroup c3 = G("cyclic(3)");
    const CentralExtension t = times_c2(c3, {0, 1, 0});
    CHECK_THROWS_AS(extend_section(gr_pq(c3), t, t.section), SectionNotPqMorphism);
  }
}

TEST_CASE("check_split") {
  for (const char* name : {"trivial", "cyclic(4)", "symmetric(3)", "klein"}) {
    CAPTURE(name);
    const CentralExtension ext = gr_pq(G(name));
    const auto s = check_split(ext);
    REQUIRE(s.has_value());
    CHECK(is_hom(ext.base(), ext.total, s->image));
    for (Index a = 0; a < ext.base().order(); ++a) CHECK(ext.proj.image[s->image[a]] == a);
  }
  const CentralExtension q8 = gr_pq(G("dicyclic(8)"));
  CHECK(check_split(q8).has_value());
  CHECK(group_iso(q8.total, direct_product(G("dicyclic(8)"), G("cyclic(2)"))).has_value());

  // C4 -> C2 and Q8 -> Q8/Z do not split.
  const FiniteGroup c4 = G("cyclic(4)");
  std::vector<Index> mod2(4);
  for (Index a = 0; a < 4; ++a) mod2[a] = a % 2;
  CHECK_FALSE(check_split(make_extension(c4, G("cyclic(2)"), mod2, {0, 1})).has_value());
  const FiniteGroup q = G("dicyclic(8)");
  const auto [quot, pi] = quotient(q, center(q));
  std::vector<Index> sec(quot.order(), 0);
  for (Index a = q.order(); a-- > 0;) sec[pi.image[a]] = a;
  sec[0] = 0;
  CHECK_FALSE(check_split(make_extension(q, quot, pi.image, sec)).has_value());
}
