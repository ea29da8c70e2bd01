#include <doctest.h>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/presentation.hpp"

using namespace powq;

namespace {

FiniteGroup G(const std::string& s) { return catalog_from_string(s); }

}  // namespace

TEST_CASE("free_reduce") {
  CHECK(free_reduce({1, -1}).empty());
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, 1, -2}) == Word{1, 1, -2});
  CHECK(free_reduce({}).empty());
}

TEST_CASE("todd_coxeter on small presentations") {
  SUBCASE("cyclic") {
    const EnumeratedGroup e = todd_coxeter({1, {{1, 1, 1, 1, 1}}});
    CHECK(e.group.order() == 5);
    CHECK(e.gen_images == std::vector<Index>{1});
    CHECK(group_iso(e.group, G("cyclic(5)")).has_value());
  }
  SUBCASE("no generators") {
    const EnumeratedGroup e = todd_coxeter({0, {}});
    CHECK(e.group.order() == 1);
  }
  SUBCASE("S3 as <a,b | a^3, b^2, abab>") {
    const EnumeratedGroup e = todd_coxeter({2, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}});
    CHECK(e.group.order() == 6);
    CHECK(group_iso(e.group, G("symmetric(3)")).has_value());
  }
  SUBCASE("Q8 as <i,j | i^4, i^2 j^-2, j i j^-1 i>") {
    const EnumeratedGroup e = todd_coxeter({2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {2, 1, -2, 1}}});
    CHECK(e.group.order() == 8);
    CHECK(group_iso(e.group, G("dicyclic(8)")).has_value());
    CHECK_FALSE(group_iso(e.group, G("dihedral(8)")).has_value());
  }
  SUBCASE("coincidences collapse a redundant presentation") {
    // a^6 = 1 and a^4 = 1 leave a^2 = 1.
    const EnumeratedGroup e = todd_coxeter({1, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1}}});
    CHECK(e.group.order() == 2);
  }
  SUBCASE("trivial group from a^2 = a^3 = 1") {
    const EnumeratedGroup e = todd_coxeter({1, {{1, 1}, {1, 1, 1}}});
    CHECK(e.group.order() == 1);
    CHECK(e.gen_images == std::vector<Index>{0});
  }
}

TEST_CASE("todd_coxeter limits and errors") {
  CHECK_THROWS_AS(todd_coxeter({1, {}}, 1000), LimitExceeded);
  CHECK_THROWS_AS(todd_coxeter({2, {{1, 2, -1, -2}}}, 1000), LimitExceeded);
  CHECK_THROWS_AS(todd_coxeter({1, {{1, 3}}}), Error);
}

TEST_CASE("rep_words evaluate to their elements") {
  const EnumeratedGroup e = todd_coxeter({2, {{1, 1, 1, 1}, {2, 2}, {1, 2, 1, 2}}});
  REQUIRE(e.group.order() == 8);
  REQUIRE(e.rep_words.size() == 8);
  CHECK(e.rep_words[0].empty());
  for (Index x = 0; x < e.group.order(); ++x) {
    CHECK(evaluate_word(e.group, e.gen_images, e.rep_words[x]) == x);
    for (int l : e.rep_words[x]) CHECK(l > 0);
  }
  // Breadth-first numbering: word lengths never decrease.
  for (std::size_t x = 1; x < e.rep_words.size(); ++x) CHECK(e.rep_words[x - 1].size() <= e.rep_words[x].size());
}

TEST_CASE("enumeration is deterministic") {
  const Presentation p{2, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}};
  const EnumeratedGroup a = todd_coxeter(p), b = todd_coxeter(p);
  CHECK(a.rep_words == b.rep_words);
  CHECK(a.gen_images == b.gen_images);
  for (Index x = 0; x < 6; ++x) {
    for (Index y = 0; y < 6; ++y) CHECK(a.group.mul(x, y) == b.group.mul(x, y));
  }
}

TEST_CASE("presentation_of_pq") {
  SUBCASE("one-point power quandle") {
    const Presentation p = presentation_of_pq(validate_pq(1, 0, 1, {0}, {0}));
    CHECK(p.num_generators == 1);
    CHECK(p.relators == std::vector<Word>{{1}});
    CHECK(todd_coxeter(p).group.order() == 1);
  }
  SUBCASE("Pq(C2)") {
    const Presentation p = presentation_of_pq(pq_of_group(G("cyclic(2)")));
    CHECK(p.num_generators == 2);
    for (const Word& w : p.relators) CHECK(free_reduce(w) == w);
    CHECK(todd_coxeter(p).group.order() == 2);
  }
  SUBCASE("3-element power quandle with trivial action") {
    const PowerQuandle q = validate_pq(3, 0, 1, {0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 1, 2});
    CHECK(todd_coxeter(presentation_of_pq(q)).group.order() == 1);
  }
  SUBCASE("Gr Pq(G) maps onto G") {
    for (const char* name : {"symmetric(3)", "cyclic(6)", "klein"}) {
      CAPTURE(name);
      const FiniteGroup g = G(name);
      const EnumeratedGroup e = todd_coxeter(presentation_of_pq(pq_of_group(g)));
      std::vector<Index> eps(g.order());
      for (Index a = 0; a < g.order(); ++a) eps[a] = a;
      for (const Word& w : presentation_of_pq(pq_of_group(g)).relators) CHECK(evaluate_word(g, eps, w) == 0);
      CHECK(e.group.order() % g.order() == 0);
    }
  }
  SUBCASE("relators have no duplicates") {
    const Presentation p = presentation_of_pq(pq_of_group(G("dihedral(8)")));
    std::vector<Word> sorted = p.relators;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (const Word& w : p.relators) CHECK_FALSE(w.empty());
  }
}

TEST_CASE("presentation text dump") {
  CHECK(to_text(Presentation{2, {{1, -2}, {2, 2, 2}}}) == "1 -2\n2 2 2\n");
}
