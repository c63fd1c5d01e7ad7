#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "finmon/elem.hpp"

namespace finmon {

// A finite set: canonically sorted, duplicate-free list of Elems.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<Elem> elems);  // sorts and dedups

  const std::vector<Elem>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Elem& x) const;
  std::size_t index_of(const Elem& x) const;  // throws cat_error if absent

  Elem as_elem() const { return Elem::set(elems_); }
  std::string str() const { return as_elem().str(); }
  static FinSet parse(std::string_view text);  // expects a set literal

  bool operator==(const FinSet&) const = default;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  std::vector<Elem> elems_;
};

// A total function between two finite sets, stored as a value table
// aligned with the domain's canonical order.
class FinMap {
 public:
  FinMap(FinSet dom, FinSet cod, std::vector<Elem> values);
  static FinMap from_fn(FinSet dom, FinSet cod,
                        const std::function<Elem(const Elem&)>& fn);
  static FinMap identity(FinSet a);
  static FinMap constant(FinSet dom, FinSet cod, Elem value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<Elem>& values() const { return values_; }

  const Elem& operator()(const Elem& x) const { return values_[dom_.index_of(x)]; }

  bool is_injective() const;
  std::string str() const;  // canonical "{x->y,...}: dom -> cod"

  bool operator==(const FinMap&) const = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Elem> values_;
};

// g after f; requires f.cod == g.dom.
FinMap compose(const FinMap& g, const FinMap& f);

// A limit cone over two legs: apex with its two projections.
struct Cone {
  FinSet apex;
  FinMap p1;
  FinMap p2;
};

// Cartesian product with coordinate projections; pairs in canonical order.
Cone product(const FinSet& a, const FinSet& b);

// Pullback of f and g over their common codomain: pairs (x,y) with f(x)=g(y).
Cone pullback(const FinMap& f, const FinMap& g);

// The mediating map into a product or pullback cone. Throws cat_error when
// the pair (q1(x), q2(x)) falls outside the apex (cone condition violated).
FinMap tupling(const FinMap& q1, const FinMap& q2, const Cone& target);

// First codomain element with no preimage, in canonical order; nullopt
// means f is surjective.
std::optional<Elem> first_unhit(const FinMap& f);
bool is_surjective(const FinMap& f);

// Section of a surjective map, picking the canonically least preimage.
FinMap right_inverse(const FinMap& s);

// Partition of the common domain by x ~ x' iff f(x)=f(x') and g(x)=g(x').
// Classes are returned as set-kind Elems.
FinSet kernel_meet_quotient(const FinMap& f, const FinMap& g);

// The terminal object 1 = {0} and its point.
Elem terminal_point();
FinSet terminal_set();
FinMap terminal_map(const FinSet& x);               // !_X : X -> 1
FinMap point_map(const Elem& x, const FinSet& to);  // x-bar : 1 -> to

// Canonical test universe: atoms a, b, c, ... (n <= 26).
FinSet canonical_set(std::size_t n);

// All maps dom -> cod in canonical order. Empty when cod is empty and dom
// is not; the unique empty map when dom is empty.
std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod);

// All subsets in canonical order.
std::vector<FinSet> all_subsets(const FinSet& x, bool nonempty_only = false);

// f x g : A1 x A2 -> B1 x B2 acting coordinatewise on the product cones.
FinMap product_map(const FinMap& f, const FinMap& g);

}  // namespace finmon
