#include <doctest.h>

#include "finmon/catalog.hpp"

using namespace finmon;

TEST_CASE("builtin catalog entries and their declared flags") {
  Catalog cat = Catalog::builtin();
  REQUIRE(cat.entries().size() == 7);

  auto flags = [&](const char* name, bool monad, bool connected, bool constant) {
    const CatalogEntry* e = cat.find(name);
    REQUIRE_MESSAGE(e != nullptr, name);
    CHECK(e->is_monad == monad);
    CHECK(e->connected == connected);
    CHECK(e->constant == constant);
  };
  flags("identity", true, true, false);
  flags("maybe", true, false, true);
  flags("list-2", true, false, true);
  flags("nonempty-powerset", true, true, false);
  flags("full-powerset", true, false, true);
  flags("rect-band", true, true, false);
  flags("diag-quotient", false, true, true);

  CHECK(cat.find("nosuch") == nullptr);
}

TEST_CASE("registration rejects wrong declared flags") {
  Catalog cat;
  CatalogEntry e;
  e.name = "mislabeled";
  e.functor = make_maybe().functor;
  e.connected = true;  // computed verdict is not connected
  e.constant = true;
  CHECK_THROWS_AS(cat.add(std::move(e)), cat_error);

  CatalogEntry dup;
  dup.name = "identity";
  dup.functor = identity_functor();
  dup.connected = true;
  cat.add(std::move(dup));
  CatalogEntry again;
  again.name = "identity";
  again.functor = identity_functor();
  again.connected = true;
  CHECK_THROWS_AS(cat.add(std::move(again)), cat_error);
}

TEST_CASE("cardinality formulas up to size 4") {
  auto pow2 = [](std::size_t n) { return std::size_t(1) << n; };
  for (std::size_t n = 0; n <= 4; ++n) {
    FinSet x = canonical_set(n);
    CHECK(make_maybe().functor.on_object(x).size() == n + 1);
    CHECK(make_nonempty_powerset().functor.on_object(x).size() == pow2(n) - 1);
    CHECK(make_full_powerset().functor.on_object(x).size() == pow2(n));
    CHECK(make_rect_band().functor.on_object(x).size() == n * n);
    // 1 + n + n^2 lists of length <= 2
    CHECK(make_list(2).functor.on_object(x).size() == 1 + n + n * n);
    if (n >= 1)
      CHECK(make_diag_quotient().on_object(x).size() == n * n - n + 1);
  }
  CHECK(make_diag_quotient().on_object(FinSet{}).empty());
}

TEST_CASE("the 4-element free semilattice covers the 2x2 product") {
  // |X|=4 with X = A x B for two 2-element sets: 15 nonempty subsets map
  // onto all 3*3 subset pairs
  FinSet a = FinSet::parse("{a,b}");
  FinSet b = FinSet::parse("{x,y}");
  Cone prod = product(a, b);
  EndoFunctor pw = make_nonempty_powerset().functor;
  CHECK(pw.on_object(prod.apex).size() == 15);
  FinMap d = tupling(pw.on_morphism(prod.p1), pw.on_morphism(prod.p2),
                     product(pw.on_object(a), pw.on_object(b)));
  CHECK(d.cod().size() == 9);
  CHECK(is_surjective(d));
}

TEST_CASE("bounded list mu flattens within the bound and rejects past it") {
  MonadData list = make_list(2);
  Elem ok = Elem::parse("[[a],[b]]");
  CHECK(list.mult_elem(ok) == Elem::parse("[a,b]"));
  CHECK(list.mult_elem(Elem::parse("[]")) == Elem::parse("[]"));
  CHECK_THROWS_AS(list.mult_elem(Elem::parse("[[a,b],[a]]")), bound_error);
  CHECK_THROWS_AS(make_list(0), cat_error);
}

TEST_CASE("diagonal quotient collapses exactly the diagonal") {
  EndoFunctor t = make_diag_quotient();
  FinSet x = FinSet::parse("{a,b}");
  FinSet y = FinSet::parse("{u}");
  FinMap c = FinMap::constant(x, y, Elem::atom("u"));
  // both off-diagonal pairs collapse to bot, bot stays bot
  FinMap tc = t.on_morphism(c);
  for (const auto& v : tc.values()) CHECK(v == Elem::atom("bot"));
  // injective maps keep pairs apart
  FinMap swap(x, x, {Elem::atom("b"), Elem::atom("a")});
  Elem ab = Elem::pair(Elem::atom("a"), Elem::atom("b"));
  CHECK(t.map_elem(swap, ab) == Elem::pair(Elem::atom("b"), Elem::atom("a")));
}

TEST_CASE("rectangular band unit and multiplication") {
  MonadData band = make_rect_band();
  Elem a = Elem::atom("a");
  CHECK(band.unit_elem(a) == Elem::pair(a, a));
  CHECK(band.mult_elem(Elem::parse("((a,b),(c,d))")) == Elem::parse("(a,d)"));
}
