#include "finmon/monad.hpp"

#include <algorithm>

namespace finmon {

FinMap MonadData::unit(const FinSet& x) const {
  return FinMap::from_fn(x, functor.on_object(x), unit_elem);
}

FinMap MonadData::mult(const FinSet& x) const {
  FinSet fx = functor.on_object(x);
  FinSet ffx = functor.on_object(fx);
  return FinMap::from_fn(std::move(ffx), std::move(fx), mult_elem);
}

Report check_unit_laws(const MonadData& m, const FinSet& x) {
  Report rep;
  rep.subject = m.functor.name;
  std::string bound = m.functor.bound_label();
  FinSet fx = m.functor.on_object(x);
  FinMap iota_x = m.unit(x);
  for (const auto& u : fx) {
    // mu . iota_{F(X)}
    Elem lhs = m.mult_elem(m.unit_elem(u));
    if (!(lhs == u)) {
      rep.fail("unit-law-left",
               "mu(iota_FX(" + u.str() + ")) = " + lhs.str() + " on X=" + x.str(),
               bound);
      return rep;
    }
    // mu . F(iota_X)
    Elem rhs = m.mult_elem(m.functor.map_elem(iota_x, u));
    if (!(rhs == u)) {
      rep.fail("unit-law-right",
               "mu(F(iota)(" + u.str() + ")) = " + rhs.str() + " on X=" + x.str(),
               bound);
      return rep;
    }
  }
  rep.pass("unit-laws", "both composites are the identity on F(" + x.str() + ")",
           bound);
  return rep;
}

Report check_mult_naturality(const MonadData& m, const FinMap& f) {
  Report rep;
  rep.subject = m.functor.name;
  std::string bound = m.functor.bound_label();
  FinMap ff = m.functor.on_morphism(f);
  FinSet ffx = m.functor.on_object(ff.dom());
  std::size_t skipped = 0;
  for (const auto& w : ffx) {
    try {
      Elem lhs = m.mult_elem(m.functor.map_elem(ff, w));
      Elem rhs = m.functor.map_elem(f, m.mult_elem(w));
      if (!(lhs == rhs)) {
        rep.fail("mult-naturality",
                 "square fails at " + w.str() + " for f=" + f.str(), bound);
        return rep;
      }
    } catch (const bound_error&) {
      // mu is partial under the bound; elements it cannot flatten are
      // outside the checkable fragment
      ++skipped;
    }
  }
  rep.pass("mult-naturality",
           "mu natural along f=" + f.str() +
               (skipped ? " (" + std::to_string(skipped) + " elements skipped)"
                        : ""),
           bound);
  return rep;
}

Report check_associativity(const MonadData& m, const FinSet& x) {
  Report rep;
  rep.subject = m.functor.name;
  std::string bound = m.functor.bound_label();
  try {
    FinMap mu_x = m.mult(x);
    FinSet fffx = m.functor.on_object(mu_x.dom());
    for (const auto& w : fffx) {
      Elem lhs = m.mult_elem(m.mult_elem(w));
      Elem rhs = m.mult_elem(m.functor.map_elem(mu_x, w));
      if (!(lhs == rhs)) {
        rep.info("associativity",
                 "not associative at " + w.str() + " on X=" + x.str(), bound);
        return rep;
      }
    }
    rep.info("associativity", "associative on X=" + x.str(), bound);
  } catch (const bound_error& e) {
    rep.info("associativity", std::string("bound-exceeded: ") + e.what(), bound);
  }
  return rep;
}

FinMap delta(const EndoFunctor& f, const FinSet& a1, const FinSet& a2) {
  Cone prod = product(a1, a2);
  FinMap fp1 = f.on_morphism(prod.p1);
  FinMap fp2 = f.on_morphism(prod.p2);
  Cone target = product(fp1.cod(), fp2.cod());
  return tupling(fp1, fp2, target);
}

Report check_delta_naturality(const EndoFunctor& fun, const FinMap& f,
                              const FinMap& g) {
  Report rep;
  rep.subject = fun.name;
  std::string bound = fun.bound_label();
  FinMap d = delta(fun, f.dom(), g.dom());
  FinMap d2 = delta(fun, f.cod(), g.cod());
  FinMap lhs = compose(product_map(fun.on_morphism(f), fun.on_morphism(g)), d);
  FinMap rhs = compose(d2, fun.on_morphism(product_map(f, g)));
  if (lhs == rhs) {
    rep.pass("delta-naturality", "f=" + f.str() + " g=" + g.str(), bound);
  } else {
    for (const auto& u : lhs.dom())
      if (!(lhs(u) == rhs(u))) {
        rep.fail("delta-naturality",
                 "square fails at " + u.str() + " for f=" + f.str() +
                     " g=" + g.str(),
                 bound);
        break;
      }
  }
  return rep;
}

SplitResult split_product(const MonadData& m, const FinSet& a1, const FinSet& a2,
                          const Elem& p, const Elem& q) {
  if (!is_connected(m.functor).connected())
    throw cat_error("split_product: monad " + m.functor.name + " is not connected");
  if (a1.empty() || a2.empty())
    throw cat_error("split_product: both factors must be nonempty");
  FinSet fa1 = m.functor.on_object(a1);
  FinSet fa2 = m.functor.on_object(a2);
  if (!fa1.contains(p))
    throw cat_error("split_product: p=" + p.str() + " not in F(" + a1.str() + ")");
  if (!fa2.contains(q))
    throw cat_error("split_product: q=" + q.str() + " not in F(" + a2.str() + ")");

  Cone prod = product(a1, a2);

  // tau(a) = F(sigma_a)(q) with sigma_a(b) = (a,b)
  std::vector<Elem> tau_values;
  SplitResult result{Elem::atom("unset"), {}, Elem::atom("unset")};
  for (const auto& a : a1) {
    FinMap sigma_a = FinMap::from_fn(
        a2, prod.apex, [&](const Elem& b) { return Elem::pair(a, b); });
    Elem tau_a = m.functor.map_elem(sigma_a, q);

    // auxiliary lemma, asserted per component: a violation here means the
    // monad data itself (iota/mu tables) is broken
    Elem proj1 = m.functor.map_elem(prod.p1, tau_a);
    if (!(proj1 == m.unit_elem(a)))
      throw cat_error("split_product: internal inconsistency, F(pi1)(tau(" +
                      a.str() + ")) = " + proj1.str() + " but iota(" + a.str() +
                      ") = " + m.unit_elem(a).str());
    Elem proj2 = m.functor.map_elem(prod.p2, tau_a);
    if (!(proj2 == q))
      throw cat_error("split_product: internal inconsistency, F(pi2)(tau(" +
                      a.str() + ")) = " + proj2.str() + " != q");

    result.tau_trace.emplace_back(a, tau_a);
    tau_values.push_back(std::move(tau_a));
  }
  FinSet tau_image(tau_values);
  FinMap tau(a1, std::move(tau_image), std::move(tau_values));

  result.f_tau_p = m.functor.map_elem(tau, p);
  result.t = m.mult_elem(result.f_tau_p);

  if (!prod.apex.empty() && !m.functor.on_object(prod.apex).contains(result.t))
    throw cat_error("split_product: internal inconsistency, t=" + result.t.str() +
                    " not in F(A1xA2)");
  Elem tp = m.functor.map_elem(prod.p1, result.t);
  Elem tq = m.functor.map_elem(prod.p2, result.t);
  if (!(tp == p) || !(tq == q))
    throw cat_error("split_product: internal inconsistency, projections of t=" +
                    result.t.str() + " are (" + tp.str() + "," + tq.str() +
                    ") instead of (" + p.str() + "," + q.str() + ")");
  return result;
}

PreservationVerdict check_weakly_preserves_product(const EndoFunctor& f,
                                                   const FinSet& a1,
                                                   const FinSet& a2) {
  FinMap d = delta(f, a1, a2);
  PreservationVerdict verdict;
  if (auto unhit = first_unhit(d)) {
    verdict.holds = false;
    verdict.unhit = *unhit;
  } else {
    verdict.holds = true;
    verdict.section = right_inverse(d);
  }
  return verdict;
}

PreservationVerdict check_weakly_preserves_constant_pullbacks(
    const EndoFunctor& f, const FinSet& x1, const FinSet& x2, const FinSet& y,
    const Elem& y1, const Elem& y2) {
  if (!y.contains(y1) || !y.contains(y2))
    throw cat_error("constant-pullback check: values must lie in the target set");
  if (x1.empty() || x2.empty())
    throw cat_error("constant-pullback check: source sets must be nonempty");
  FinMap c1 = FinMap::constant(x1, y, y1);
  FinMap c2 = FinMap::constant(x2, y, y2);
  Cone pb = pullback(c1, c2);
  Cone fpb = pullback(f.on_morphism(c1), f.on_morphism(c2));
  FinMap mediator =
      tupling(f.on_morphism(pb.p1), f.on_morphism(pb.p2), fpb);
  PreservationVerdict verdict;
  if (auto unhit = first_unhit(mediator)) {
    verdict.holds = false;
    verdict.unhit = *unhit;
  } else {
    verdict.holds = true;
    verdict.section = right_inverse(mediator);
  }
  return verdict;
}

Report verify_main_theorem(const MonadData& m, int max_size) {
  Report rep;
  rep.subject = m.functor.name;
  std::string bound = m.functor.bound_label();

  ConnectivityResult conn = is_connected(m.functor);
  bool trivial = m.functor.declared_f_one.empty() &&
                 m.functor.on_object(canonical_set(std::size_t(max_size))).empty();
  switch (conn.verdict) {
    case Connectivity::Connected:
      rep.info("connectivity", "connected: F(1) = " + m.functor.declared_f_one.str());
      break;
    case Connectivity::NotConnected:
      rep.info("connectivity",
               conn.witnesses
                   ? "not connected: " + conn.witnesses->first.str() + " and " +
                         conn.witnesses->second.str() + " in F(1)"
                   : "not connected: F(1) is empty (trivial functor)",
               bound);
      break;
    case Connectivity::UnknownUnderBound:
      rep.info("connectivity", "unknown", bound);
      break;
  }

  bool all_preserved = true;
  std::string first_failure;
  for (int n1 = 1; n1 <= max_size; ++n1)
    for (int n2 = 1; n2 <= max_size; ++n2) {
      FinSet a1 = canonical_set(std::size_t(n1));
      FinSet a2 = canonical_set(std::size_t(n2));
      PreservationVerdict pv = check_weakly_preserves_product(m.functor, a1, a2);
      if (!pv.holds && all_preserved) {
        all_preserved = false;
        first_failure = "delta misses " + pv.unhit->str() + " at |A1|=" +
                        std::to_string(n1) + " |A2|=" + std::to_string(n2);
      }
    }
  rep.info("delta-surjectivity",
           all_preserved ? "delta surjective on all tested pairs" : first_failure,
           bound);

  if (conn.connected()) {
    std::size_t splits = 0;
    for (int n1 = 1; n1 <= max_size; ++n1)
      for (int n2 = 1; n2 <= max_size; ++n2) {
        FinSet a1 = canonical_set(std::size_t(n1));
        FinSet a2 = canonical_set(std::size_t(n2));
        for (const auto& p : m.functor.on_object(a1))
          for (const auto& q : m.functor.on_object(a2)) {
            try {
              split_product(m, a1, a2, p, q);
              ++splits;
            } catch (const cat_error& e) {
              rep.fail("split-coverage", e.what(), bound);
              return rep;
            }
          }
      }
    rep.pass("split-coverage",
             std::to_string(splits) + " (p,q) pairs split successfully", bound);
  }

  if (conn.verdict == Connectivity::UnknownUnderBound) {
    rep.info("biconditional", "connectivity unknown under bound, not decided",
             bound);
  } else if (all_preserved == (conn.connected() || trivial)) {
    rep.pass("biconditional",
             trivial ? "trivial functor, vacuously consistent"
                     : "product preservation matches connectivity",
             bound);
  } else {
    rep.fail("biconditional",
             std::string("preservation=") + (all_preserved ? "yes" : "no") +
                 " but connected=" + (conn.connected() ? "yes" : "no"),
             bound);
  }
  return rep;
}

Report verify_theorem_equivalence(const EndoFunctor& f, int max_size) {
  Report rep;
  rep.subject = f.name;
  std::string bound = f.bound_label();
  if (f.on_object(canonical_set(2)).empty())
    throw cat_error("equivalence check requires a nontrivial functor");

  std::optional<Elem> constant = has_constant(f);
  bool products_ok = true;
  std::string product_witness;
  for (int n1 = 1; n1 <= max_size && products_ok; ++n1)
    for (int n2 = 1; n2 <= max_size && products_ok; ++n2) {
      PreservationVerdict pv = check_weakly_preserves_product(
          f, canonical_set(std::size_t(n1)), canonical_set(std::size_t(n2)));
      if (!pv.holds) {
        products_ok = false;
        product_witness = "delta misses " + pv.unhit->str() + " at |A1|=" +
                          std::to_string(n1) + " |A2|=" + std::to_string(n2);
      }
    }
  bool clause1 = !constant && products_ok;
  rep.info("clause-1",
           std::string(constant ? "has constant " + constant->str()
                                : "no constant") +
               "; " + (products_ok ? "products preserved" : product_witness),
           bound);

  bool connected = is_connected(f).connected();
  bool pullbacks_ok = true;
  std::string pullback_witness;
  for (int n1 = 1; n1 <= max_size && pullbacks_ok; ++n1)
    for (int n2 = 1; n2 <= max_size && pullbacks_ok; ++n2)
      for (int ny = 1; ny <= max_size && pullbacks_ok; ++ny) {
        FinSet y = canonical_set(std::size_t(ny));
        for (const auto& y1 : y) {
          for (const auto& y2 : y) {
            PreservationVerdict pv = check_weakly_preserves_constant_pullbacks(
                f, canonical_set(std::size_t(n1)), canonical_set(std::size_t(n2)),
                y, y1, y2);
            if (!pv.holds) {
              pullbacks_ok = false;
              pullback_witness =
                  "mediator misses " + pv.unhit->str() + " for c_" + y1.str() +
                  ", c_" + y2.str() + " into " + y.str();
              break;
            }
          }
          if (!pullbacks_ok) break;
        }
      }
  bool clause2 = connected && pullbacks_ok;
  rep.info("clause-2",
           std::string(connected ? "connected" : "not connected") + "; " +
               (pullbacks_ok ? "constant pullbacks preserved" : pullback_witness),
           bound);

  if (clause1 == clause2) {
    rep.pass("equivalence", std::string("both clauses ") +
                                (clause1 ? "hold" : "fail"), bound);
  } else {
    rep.fail("equivalence",
             std::string("clause1=") + (clause1 ? "true" : "false") +
                 " clause2=" + (clause2 ? "true" : "false"),
             bound);
  }
  return rep;
}

Report quotient_iso_check(const MonadData& m, const FinSet& a, const FinSet& b) {
  Report rep;
  rep.subject = m.functor.name;
  std::string bound = m.functor.bound_label();
  Cone prod = product(a, b);
  FinMap fp1 = m.functor.on_morphism(prod.p1);
  FinMap fp2 = m.functor.on_morphism(prod.p2);
  FinSet classes = kernel_meet_quotient(fp1, fp2);

  Cone target = product(fp1.cod(), fp2.cod());
  FinMap induced = FinMap::from_fn(classes, target.apex, [&](const Elem& cls) {
    const Elem& representative = cls.children().front();
    return Elem::pair(fp1(representative), fp2(representative));
  });

  std::size_t expected = fp1.cod().size() * fp2.cod().size();
  if (classes.size() == expected && induced.is_injective() && is_surjective(induced)) {
    rep.pass("quotient-iso",
             std::to_string(classes.size()) + " classes = |F(A)|*|F(B)| = " +
                 std::to_string(expected) + ", induced map bijective",
             bound);
  } else {
    rep.fail("quotient-iso",
             std::to_string(classes.size()) + " classes vs |F(A)|*|F(B)| = " +
                 std::to_string(expected),
             bound);
  }
  return rep;
}

}  // namespace finmon
