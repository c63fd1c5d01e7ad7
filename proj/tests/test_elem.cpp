#include <doctest.h>

#include <algorithm>

#include "finmon/elem.hpp"

using namespace finmon;

TEST_CASE("atoms, pairs, nodes and collections print canonically") {
  Elem a = Elem::atom("a");
  Elem b = Elem::atom("b");
  CHECK(a.str() == "a");
  CHECK(Elem::pair(a, b).str() == "(a,b)");
  CHECK(Elem::node("some", {a}).str() == "some(a)");
  CHECK(Elem::node("nil", {}).str() == "nil()");
  CHECK(Elem::list({b, a, b}).str() == "[b,a,b]");
}

TEST_CASE("set collections deduplicate and sort") {
  Elem a = Elem::atom("a");
  Elem b = Elem::atom("b");
  Elem s = Elem::set({b, a, b, a});
  CHECK(s.str() == "{a,b}");
  CHECK(s == Elem::set({a, b}));
}

TEST_CASE("parse round-trips the canonical encoding") {
  for (const char* text :
       {"a", "(a,b)", "some(a)", "{a,b}", "[b,a]", "((a,b),{x,y})",
        "node(a,[b,c])", "[]", "{}", "some(some(none))"}) {
    Elem e = Elem::parse(text);
    CHECK(Elem::parse(e.str()) == e);
  }
  CHECK(Elem::parse(" ( a , b ) ") == Elem::pair(Elem::atom("a"), Elem::atom("b")));
  // non-canonical set literal normalizes
  CHECK(Elem::parse("{b,a,b}").str() == "{a,b}");
}

TEST_CASE("parse rejects malformed literals") {
  for (const char* text : {"", "(a", "(a,b", "{a,", "a)", "(a,b,c)", "a b"})
    CHECK_THROWS_AS(Elem::parse(text), schema_error);
}

TEST_CASE("ordering is a strict total order consistent with equality") {
  std::vector<Elem> elems = {
      Elem::atom("a"),
      Elem::atom("b"),
      Elem::atom("0"),
      Elem::pair(Elem::atom("a"), Elem::atom("b")),
      Elem::pair(Elem::atom("b"), Elem::atom("a")),
      Elem::node("some", {Elem::atom("a")}),
      Elem::node("none", {}),
      Elem::set({Elem::atom("a")}),
      Elem::set({Elem::atom("a"), Elem::atom("b")}),
      Elem::list({}),
      Elem::list({Elem::atom("a")}),
      Elem::list({Elem::atom("a"), Elem::atom("a")}),
  };
  for (const auto& x : elems)
    for (const auto& y : elems) {
      // trichotomy
      int rel = (x < y) + (y < x) + (x == y);
      CHECK(rel == 1);
      // equality iff identical encodings
      CHECK((x == y) == (x.str() == y.str()));
      for (const auto& z : elems)
        if (x < y && y < z) CHECK(x < z);
    }
}

TEST_CASE("left/right only apply to pairs") {
  CHECK_THROWS_AS(Elem::atom("a").left(), cat_error);
  Elem p = Elem::pair(Elem::atom("x"), Elem::atom("y"));
  CHECK(p.left().str() == "x");
  CHECK(p.right().str() == "y");
}
