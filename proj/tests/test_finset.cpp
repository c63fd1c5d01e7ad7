#include <doctest.h>

#include <algorithm>

#include "finmon/finset.hpp"

using namespace finmon;

namespace {

Elem atom(const char* s) { return Elem::atom(s); }

}  // namespace

TEST_CASE("finset construction sorts, dedups and is deterministic") {
  FinSet s({atom("c"), atom("a"), atom("b"), atom("a")});
  CHECK(s.size() == 3);
  CHECK(s.str() == "{a,b,c}");
  CHECK(FinSet::parse(s.str()) == s);
  CHECK(FinSet({atom("b"), atom("c"), atom("a")}) == s);
}

TEST_CASE("composition: identities, constants, associativity") {
  FinSet ab = FinSet::parse("{a,b}");
  FinSet zo = FinSet::parse("{0,1}");
  FinSet u = FinSet::parse("{u}");
  FinMap f(ab, zo, {atom("0"), atom("1")});
  CHECK(compose(f, FinMap::identity(ab)) == f);
  CHECK(compose(FinMap::identity(zo), f) == f);

  FinMap g = FinMap::constant(zo, u, atom("u"));
  CHECK(compose(g, f) == FinMap::constant(ab, u, atom("u")));

  // associativity over every composable triple on small sets
  for (const auto& p : all_maps(ab, zo))
    for (const auto& q : all_maps(zo, ab))
      for (const auto& r : all_maps(ab, u))
        CHECK(compose(r, compose(q, p)) == compose(compose(r, q), p));

  CHECK_THROWS_AS(compose(f, g), cat_error);
}

TEST_CASE("products: cardinality, unit, empty factor") {
  FinSet a = FinSet::parse("{a,b}");
  FinSet b = FinSet::parse("{x,y,z}");
  Cone p = product(a, b);
  CHECK(p.apex.size() == 6);
  CHECK(p.p1.cod() == a);
  CHECK(p.p2.cod() == b);

  Cone pu = product(a, terminal_set());
  CHECK(pu.apex.size() == a.size());
  CHECK(pu.p1.is_injective());
  CHECK(is_surjective(pu.p1));

  Cone pe = product(FinSet{}, b);
  CHECK(pe.apex.empty());
}

TEST_CASE("pullbacks of terminal and constant maps") {
  FinSet a = FinSet::parse("{a,b}");
  FinSet b = FinSet::parse("{x,y}");
  // pullback of the terminal maps is the product
  Cone pb = pullback(terminal_map(a), terminal_map(b));
  Cone pr = product(a, b);
  CHECK(pb.apex == pr.apex);
  CHECK(pb.p1 == pr.p1);
  CHECK(pb.p2 == pr.p2);

  FinSet y = FinSet::parse("{0,1}");
  // same constant value: full product
  Cone same = pullback(FinMap::constant(a, y, atom("0")),
                       FinMap::constant(b, y, atom("0")));
  CHECK(same.apex == pr.apex);
  // different values: empty carrier with empty maps
  Cone diff = pullback(FinMap::constant(a, y, atom("0")),
                       FinMap::constant(b, y, atom("1")));
  CHECK(diff.apex.empty());
  CHECK(diff.p1.dom().empty());

  CHECK_THROWS_AS(pullback(terminal_map(a), FinMap::constant(b, y, atom("0"))),
                  cat_error);
}

TEST_CASE("tupling: diagonal, projections, constants, cone violations") {
  FinSet a = FinSet::parse("{a,b}");
  Cone p = product(a, a);
  FinMap diag = tupling(FinMap::identity(a), FinMap::identity(a), p);
  CHECK(diag(atom("a")) == Elem::pair(atom("a"), atom("a")));

  CHECK(tupling(p.p1, p.p2, p) == FinMap::identity(p.apex));

  FinSet q = FinSet::parse("{q1,q2,q3}");
  FinMap c = tupling(FinMap::constant(q, a, atom("a")),
                     FinMap::constant(q, a, atom("b")), p);
  CHECK(c == FinMap::constant(q, p.apex, Elem::pair(atom("a"), atom("b"))));

  // competitor into a pullback violating the cone condition
  FinSet y = FinSet::parse("{0,1}");
  Cone pb = pullback(FinMap::constant(a, y, atom("0")),
                     FinMap::constant(a, y, atom("1")));
  CHECK_THROWS_AS(tupling(FinMap::identity(a), FinMap::identity(a), pb), cat_error);
}

TEST_CASE("product mediators are unique") {
  FinSet a = FinSet::parse("{a,b}");
  FinSet b = FinSet::parse("{x,y}");
  FinSet q = FinSet::parse("{p,q}");
  Cone cone = product(a, b);
  for (const auto& q1 : all_maps(q, a))
    for (const auto& q2 : all_maps(q, b)) {
      FinMap d = tupling(q1, q2, cone);
      CHECK(compose(cone.p1, d) == q1);
      CHECK(compose(cone.p2, d) == q2);
      // any competitor mediator satisfying both equations coincides with d
      for (const auto& other : all_maps(q, cone.apex))
        if (compose(cone.p1, other) == q1 && compose(cone.p2, other) == q2)
          CHECK(other == d);
    }
}

TEST_CASE("surjectivity and witnesses") {
  FinSet a = FinSet::parse("{a,b}");
  CHECK(is_surjective(FinMap::identity(a)));
  FinMap incl(FinSet::parse("{a}"), a, {atom("a")});
  CHECK_FALSE(is_surjective(incl));
  CHECK(first_unhit(incl) == atom("b"));
  // empty-to-empty map is surjective
  CHECK(is_surjective(FinMap(FinSet{}, FinSet{}, {})));
}

TEST_CASE("right inverse picks the least preimage") {
  FinSet a = FinSet::parse("{a,b}");
  FinSet z = FinSet::parse("{0}");
  CHECK(right_inverse(FinMap::identity(a)) == FinMap::identity(a));
  FinMap collapse = FinMap::constant(a, z, atom("0"));
  CHECK(right_inverse(collapse)(atom("0")) == atom("a"));
  CHECK_THROWS_AS(right_inverse(FinMap(FinSet::parse("{a}"), a, {atom("a")})),
                  cat_error);
}

TEST_CASE("every surjective map between small sets has a verified section") {
  FinSet dom = FinSet::parse("{a,b,c}");
  for (std::size_t n = 0; n <= 3; ++n) {
    FinSet cod = canonical_set(n);
    for (const auto& s : all_maps(dom, cod)) {
      if (!is_surjective(s)) continue;
      CHECK(compose(s, right_inverse(s)) == FinMap::identity(cod));
    }
  }
}

TEST_CASE("kernel meet quotient") {
  FinSet a = FinSet::parse("{a,b,c}");
  FinSet z = FinSet::parse("{0,1}");
  FinMap inj = FinMap::identity(a);
  FinMap g = FinMap::constant(a, z, atom("0"));
  CHECK(kernel_meet_quotient(inj, g).size() == a.size());
  CHECK(kernel_meet_quotient(g, g).size() == 1);
  CHECK_THROWS_AS(kernel_meet_quotient(g, FinMap::identity(z)), cat_error);
}

TEST_CASE("class count equals the image of the pairing") {
  FinSet a = FinSet::parse("{a,b,c}");
  FinSet z = FinSet::parse("{0,1}");
  Cone target = product(z, z);
  for (const auto& f : all_maps(a, z))
    for (const auto& g : all_maps(a, z)) {
      FinSet classes = kernel_meet_quotient(f, g);
      FinMap paired = tupling(f, g, target);
      FinSet image(paired.values());
      CHECK(classes.size() == image.size());
    }
}

TEST_CASE("all_maps enumeration counts") {
  CHECK(all_maps(canonical_set(2), canonical_set(3)).size() == 9);
  CHECK(all_maps(canonical_set(0), canonical_set(3)).size() == 1);
  CHECK(all_maps(canonical_set(2), canonical_set(0)).empty());
}
