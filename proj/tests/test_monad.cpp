#include <doctest.h>

#include "finmon/catalog.hpp"
#include "finmon/suite.hpp"

using namespace finmon;

namespace {

Elem E(const char* s) { return Elem::parse(s); }

}  // namespace

TEST_CASE("unit laws hold for every catalog monad") {
  for (auto make : {make_identity, make_maybe, make_nonempty_powerset,
                    make_full_powerset, make_rect_band}) {
    MonadData m = make();
    for (std::size_t n = 0; n <= 3; ++n)
      CHECK(check_unit_laws(m, canonical_set(n)).ok());
  }
  MonadData list = make_list(2);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(check_unit_laws(list, canonical_set(n)).ok());
}

TEST_CASE("the broken rectangular band fails a unit law with a witness") {
  Report rep = check_unit_laws(make_broken_rect_band(), canonical_set(2));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.checks.back().check == "unit-law-left");
  CHECK_FALSE(rep.checks.back().witness.empty());
}

TEST_CASE("mult naturality, including the partial bounded-list mu") {
  FinSet x = canonical_set(2);
  FinSet y = canonical_set(2);
  for (auto make : {make_identity, make_maybe, make_nonempty_powerset,
                    make_rect_band}) {
    MonadData m = make();
    for (const auto& f : all_maps(x, y))
      CHECK(check_mult_naturality(m, f).ok());
  }
  MonadData list = make_list(2);
  for (const auto& f : all_maps(x, y)) {
    Report rep = check_mult_naturality(list, f);
    CHECK(rep.ok());
    // some F(F(X)) elements flatten past the bound and must be skipped
    CHECK(rep.checks.back().witness.find("skipped") != std::string::npos);
  }
}

TEST_CASE("associativity is informative: band associative, bound degrades") {
  Report band = check_associativity(make_rect_band(), canonical_set(2));
  CHECK(band.checks.back().witness.find("associative") == 0);

  // at |X|=2 the triple powerset is still enumerable and associative
  Report pw2 = check_associativity(make_nonempty_powerset(), canonical_set(2));
  CHECK(pw2.checks.back().witness.find("associative") == 0);
  // at |X|=3 enumerating F(F(F(X))) trips the subset-enumeration guard
  Report pw3 = check_associativity(make_nonempty_powerset(), canonical_set(3));
  CHECK(pw3.checks.back().witness.find("bound-exceeded") == 0);
}

TEST_CASE("delta for the rectangular band is a bijection") {
  EndoFunctor band = make_rect_band().functor;
  FinSet a = canonical_set(2);
  FinSet b = canonical_set(3);
  FinMap d = delta(band, a, b);
  CHECK(d.dom().size() == 36);
  CHECK(d.cod().size() == 36);
  CHECK(d.is_injective());
  CHECK(is_surjective(d));
}

TEST_CASE("delta for maybe misses mixed pairs") {
  FinSet a = canonical_set(2);
  FinMap d = delta(make_maybe().functor, a, a);
  auto unhit = first_unhit(d);
  REQUIRE(unhit.has_value());
  // a none paired with a some can have no preimage
  CHECK(unhit->left() == Elem::atom("none"));
  CHECK(unhit->right().children().size() == 1);
}

TEST_CASE("delta is natural in both components") {
  EndoFunctor pw = make_nonempty_powerset().functor;
  FinSet two = canonical_set(2);
  for (const auto& f : all_maps(two, two))
    for (const auto& g : all_maps(two, canonical_set(1)))
      CHECK(check_delta_naturality(pw, f, g).ok());
}

TEST_CASE("split for the identity monad returns the pair itself") {
  FinSet a1 = FinSet::parse("{a,b}");
  FinSet a2 = FinSet::parse("{x,y}");
  SplitResult r = split_product(make_identity(), a1, a2, E("a"), E("y"));
  CHECK(r.t == E("(a,y)"));
}

TEST_CASE("split for the rectangular band matches the hand computation") {
  FinSet a = FinSet::parse("{a,b}");
  SplitResult r = split_product(make_rect_band(), a, a, E("(a,b)"), E("(b,a)"));
  CHECK(r.t == E("((a,b),(b,a))"));
  REQUIRE(r.tau_trace.size() == 2);
  CHECK(r.tau_trace[0].second == E("((a,b),(a,a))"));
  CHECK(r.tau_trace[1].second == E("((b,b),(b,a))"));
}

TEST_CASE("split for the free semilattice is the expected rectangle") {
  FinSet a1 = FinSet::parse("{a,b}");
  FinSet a2 = FinSet::parse("{x,y}");
  MonadData pw = make_nonempty_powerset();
  SplitResult r = split_product(pw, a1, a2, E("{a,b}"), E("{x}"));
  CHECK(r.t == E("{(a,x),(b,x)}"));
  CHECK(split_product(pw, a1, a2, E("{a,b}"), E("{x,y}")).t ==
        E("{(a,x),(a,y),(b,x),(b,y)}"));
}

TEST_CASE("every split projects back onto its inputs") {
  MonadData pw = make_nonempty_powerset();
  FinSet a1 = canonical_set(2);
  FinSet a2 = canonical_set(3);
  Cone prod = product(a1, a2);
  for (const auto& p : pw.functor.on_object(a1))
    for (const auto& q : pw.functor.on_object(a2)) {
      SplitResult r = split_product(pw, a1, a2, p, q);
      CHECK(pw.functor.map_elem(prod.p1, r.t) == p);
      CHECK(pw.functor.map_elem(prod.p2, r.t) == q);
    }
}

TEST_CASE("split preconditions") {
  FinSet a = canonical_set(2);
  // non-connected monad
  CHECK_THROWS_AS(split_product(make_maybe(), a, a, E("none"), E("none")),
                  cat_error);
  // empty factor
  CHECK_THROWS_AS(
      split_product(make_identity(), FinSet{}, a, E("a"), E("a")), cat_error);
  // p outside F(A1)
  CHECK_THROWS_AS(split_product(make_identity(), a, a, E("z"), E("a")),
                  cat_error);
}

TEST_CASE("a broken multiplication is caught as an internal inconsistency") {
  MonadData broken = make_broken_rect_band();
  FinSet a = canonical_set(2);
  CHECK_THROWS_WITH_AS(
      split_product(broken, a, a, E("(a,a)"), E("(a,b)")),
      doctest::Contains("internal inconsistency"), cat_error);
}

TEST_CASE("product preservation verdicts carry sections or witnesses") {
  FinSet a = canonical_set(2);
  auto good = check_weakly_preserves_product(make_rect_band().functor, a, a);
  REQUIRE(good.holds);
  REQUIRE(good.section.has_value());
  CHECK(compose(delta(make_rect_band().functor, a, a), *good.section) ==
        FinMap::identity(good.section->dom()));

  auto bad = check_weakly_preserves_product(make_full_powerset().functor, a, a);
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.unhit.has_value());
}

TEST_CASE("constant-pullback preservation splits the diagonal quotient") {
  EndoFunctor t = make_diag_quotient();
  FinSet two = canonical_set(2);
  Elem y0 = two.elems()[0];
  Elem y1 = two.elems()[1];
  // same value: reduces to the product case, which T preserves
  CHECK(check_weakly_preserves_constant_pullbacks(t, two, two, two, y0, y0).holds);
  // distinct values: T(emptyset) = emptyset cannot cover T(X) x T(X)
  auto pv = check_weakly_preserves_constant_pullbacks(t, two, two, two, y0, y1);
  CHECK_FALSE(pv.holds);
  CHECK(pv.unhit.has_value());
  // the nonempty powerset also has empty F(emptyset), but its F(c)-images
  // are disjoint singletons, so both pullbacks are empty and it holds
  CHECK(check_weakly_preserves_constant_pullbacks(
            make_nonempty_powerset().functor, two, two, two, y0, y1)
            .holds);
}

TEST_CASE("main theorem holds for every catalog monad") {
  for (auto make : {make_identity, make_maybe, make_nonempty_powerset,
                    make_full_powerset, make_rect_band}) {
    Report rep = verify_main_theorem(make(), 3);
    CHECK(rep.ok());
  }
  CHECK(verify_main_theorem(make_list(2), 3).ok());
}

TEST_CASE("theorem-2 equivalence holds for every catalog functor") {
  Catalog cat = Catalog::builtin();
  for (const auto& e : cat.entries()) CHECK(verify_theorem_equivalence(e.functor, 2).ok());
}

TEST_CASE("theorem-2 equivalence rejects a trivial functor") {
  EndoFunctor trivial;
  trivial.name = "trivial";
  trivial.on_object = [](const FinSet&) { return FinSet{}; };
  trivial.map_elem = [](const FinMap&, const Elem& u) { return u; };
  CHECK_THROWS_AS(verify_theorem_equivalence(trivial, 2), cat_error);
}

TEST_CASE("quotient iso holds for connected monads, fails for maybe") {
  FinSet a = canonical_set(2);
  FinSet b = canonical_set(3);
  CHECK(quotient_iso_check(make_identity(), a, b).ok());
  CHECK(quotient_iso_check(make_nonempty_powerset(), a, b).ok());
  CHECK(quotient_iso_check(make_rect_band(), a, b).ok());
  CHECK_FALSE(quotient_iso_check(make_maybe(), a, b).ok());
}

TEST_CASE("the 2x2 free semilattice quotient has 9 classes from 15 elements") {
  MonadData pw = make_nonempty_powerset();
  FinSet a = canonical_set(2);
  Cone prod = product(a, a);
  CHECK(pw.functor.on_object(prod.apex).size() == 15);
  FinSet classes = kernel_meet_quotient(pw.functor.on_morphism(prod.p1),
                                        pw.functor.on_morphism(prod.p2));
  CHECK(classes.size() == 9);
}
