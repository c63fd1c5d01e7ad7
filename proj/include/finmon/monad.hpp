#pragma once

#include "finmon/functor.hpp"

namespace finmon {

// A (not necessarily associative) monad: functor plus unit and
// multiplication. Both structure maps are element-level so that bounded
// functors can evaluate them without materializing F(F(X)).
struct MonadData {
  EndoFunctor functor;
  std::function<Elem(const Elem&)> unit_elem;  // iota_X(x), uniform in X
  std::function<Elem(const Elem&)> mult_elem;  // mu_X on an element of F(F(X))

  FinMap unit(const FinSet& x) const;  // iota_X : X -> F(X)
  FinMap mult(const FinSet& x) const;  // mu_X : F(F(X)) -> F(X), full table
};

// Both unit laws, verified pointwise over F(X):
//   mu . iota_{F(X)} = id = mu . F(iota_X).
Report check_unit_laws(const MonadData& m, const FinSet& x);

// mu_Y . F(F(f)) = F(f) . mu_X for f : X -> Y.
Report check_mult_naturality(const MonadData& m, const FinMap& f);

// mu_X . mu_{F(X)} = mu_X . F(mu_X), informative only; never gates
// anything else.
Report check_associativity(const MonadData& m, const FinSet& x);

// The canonical comparison map (F(pi1), F(pi2)) : F(A1xA2) -> F(A1)xF(A2).
FinMap delta(const EndoFunctor& f, const FinSet& a1, const FinSet& a2);

// (F(f) x F(g)) . delta = delta' . F(f x g).
Report check_delta_naturality(const EndoFunctor& fun, const FinMap& f,
                              const FinMap& g);

struct SplitResult {
  Elem t;  // element of F(A1xA2) with F(pi1)(t)=p and F(pi2)(t)=q
  // tau(a) = F(sigma_a)(q) for each a in A1, plus the intermediate F(tau)(p)
  std::vector<std::pair<Elem, Elem>> tau_trace;
  Elem f_tau_p;
};

// The constructive splitting: sigma_a(b)=(a,b), tau(a)=F(sigma_a)(q),
// t = mu(F(tau)(p)). Requires a connected monad and nonempty factors;
// asserts F(pi1).tau = iota and F(pi2).tau = c_q internally and verifies
// both projections of t before returning.
SplitResult split_product(const MonadData& m, const FinSet& a1, const FinSet& a2,
                          const Elem& p, const Elem& q);

struct PreservationVerdict {
  bool holds = false;
  std::optional<Elem> unhit;     // witness when preservation fails
  std::optional<FinMap> section; // right inverse when it holds
};

// Weak preservation of the product A1 x A2: surjectivity of delta.
PreservationVerdict check_weakly_preserves_product(const EndoFunctor& f,
                                                   const FinSet& a1,
                                                   const FinSet& a2);

// Weak preservation of the pullback of the constant maps
// c_{y1} : X1 -> Y and c_{y2} : X2 -> Y.
PreservationVerdict check_weakly_preserves_constant_pullbacks(
    const EndoFunctor& f, const FinSet& x1, const FinSet& x2, const FinSet& y,
    const Elem& y1, const Elem& y2);

// The biconditional: F weakly preserves all products iff F(1) is a
// singleton (or F is the trivial functor). When connected, also runs
// split_product on every (p,q) pair.
Report verify_main_theorem(const MonadData& m, int max_size);

// For a nontrivial functor: "no constant and weakly preserves products"
// iff "connected and weakly preserves pullbacks of constant maps".
Report verify_theorem_equivalence(const EndoFunctor& f, int max_size);

// The quotient F(AxB) / (Ker F(pi1) meet Ker F(pi2)) has exactly
// |F(A)|*|F(B)| classes and maps bijectively onto F(A)xF(B).
Report quotient_iso_check(const MonadData& m, const FinSet& a, const FinSet& b);

}  // namespace finmon
