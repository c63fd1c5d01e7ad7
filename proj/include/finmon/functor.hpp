#pragma once

#include <map>
#include <optional>
#include <utility>

#include "finmon/finset.hpp"
#include "finmon/report.hpp"

namespace finmon {

// An extensional endofunctor on finite sets. The element-level morphism
// action map_elem is the primitive: it must never need to enumerate the
// codomain F-set, so it stays usable where F(F(X)) would be astronomical.
struct EndoFunctor {
  enum class Finiteness { Finite, Bounded };

  std::string name;
  Finiteness finiteness = Finiteness::Finite;
  int bound = 0;  // structure-size bound when finiteness == Bounded

  std::function<FinSet(const FinSet&)> on_object;
  std::function<Elem(const FinMap&, const Elem&)> map_elem;

  FinSet declared_f_empty;
  FinSet declared_f_one;
  // True when the F(1) enumeration is cut off by the bound, so a small
  // F(1) does not prove connectedness.
  bool f_one_bound_limited = false;

  // Ff as a full table; enumerates F(dom) and F(cod).
  FinMap on_morphism(const FinMap& f) const;

  std::string bound_label() const;  // "" for finite, "under bound k" otherwise
};

EndoFunctor identity_functor();

// Verifies F(id) = id and F(g.f) = F(g).F(f) over all canonical sets up
// to max_size and all maps between them.
Report check_functor_laws(const EndoFunctor& f, int max_size);

enum class Connectivity { Connected, NotConnected, UnknownUnderBound };

struct ConnectivityResult {
  Connectivity verdict;
  // Two distinct elements of F(1) when NotConnected (absent for the
  // trivial functor, whose F(1) is empty).
  std::optional<std::pair<Elem, Elem>> witnesses;

  bool connected() const { return verdict == Connectivity::Connected; }
};

ConnectivityResult is_connected(const EndoFunctor& f);

// The partition F(X) = sum of F_e(X), with F_e(X) the preimage of e
// under F(!_X). Keys are the elements of F(1).
std::map<Elem, FinSet> decompose_connected(const EndoFunctor& f, const FinSet& x);

// The natural transformation Id -> F induced by e in F(1):
// iota_X(x) = F(x-bar)(e).
FinMap yoneda_iota(const EndoFunctor& f, const Elem& e, const FinSet& x);

// An element of F(1) fused by the two points of a two-element set, if
// any; such an element induces a constant of F (natural away from the
// empty set).
std::optional<Elem> has_constant(const EndoFunctor& f);

// For connected F checks F(c_y) = c_{iota_Y(y)}; for arbitrary F reports
// whether F(c_y) is constant at all.
Report check_constant_map_preservation(const EndoFunctor& f, const FinSet& x,
                                       const FinSet& y, const Elem& value);

// For connected F, confirms exactly one branch: the Yoneda iota is
// injective on all sets up to max_size (identity subfunctor), or F
// possesses a constant.
Report check_identity_subfunctor_dichotomy(const EndoFunctor& f, int max_size);

// A transformation from Id (source absent) or another functor into
// target, given by its components. constant_style exempts naturality
// squares whose source object is the empty set.
struct NatTrans {
  std::optional<EndoFunctor> source;  // nullopt = identity functor
  EndoFunctor target;
  std::function<FinMap(const FinSet&)> component;
  bool constant_style = false;
};

// Checks every naturality square over canonical sets up to max_size.
Report check_naturality(const NatTrans& nt, int max_size);

}  // namespace finmon
